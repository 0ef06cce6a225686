"""Dense multi-qubit pure states and density matrices.

Qubit ordering convention used throughout the package: qubit 0 is the
leftmost character of a ket label and the most significant bit of the
amplitude index, so ``|1001>`` on four qubits sits at index 9.  Subsystem
roles follow the same order: qubit 0 plays A, qubit 1 plays B and qubit
``i + 1`` plays C_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

MAX_QUBITS = 12

NORM_ATOL = 1e-12
HERMITICITY_ATOL = 1e-12
TRACE_ATOL = 1e-12
PSD_FLOOR = -1e-10


@dataclass(frozen=True)
class PureState:
    """Normalized amplitude vector over ``n_qubits`` qubits."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if not 1 <= self.n_qubits <= MAX_QUBITS:
            raise ValueError(f"n_qubits must be in [1, {MAX_QUBITS}], got {self.n_qubits}")
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (2**self.n_qubits,):
            raise ValueError(
                f"amplitude vector must have length 2**{self.n_qubits}, got shape {amps.shape}"
            )
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > 1e-6:
            raise ValueError(f"state norm {norm} deviates from 1 beyond tolerance")
        if abs(norm - 1.0) > NORM_ATOL:
            amps = amps / norm
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return 2**self.n_qubits

    def density_matrix(self) -> "DensityMatrix":
        return DensityMatrix(tuple(range(self.n_qubits)), np.outer(self.amplitudes, self.amplitudes.conj()))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, trace-one, positive-semidefinite matrix over labeled qubits.

    ``qubit_labels`` records which qubits of the original system the rows and
    columns refer to, in ascending order.  Eigenvalues down to ``PSD_FLOOR``
    are tolerated as numerical noise; anything more negative is rejected.
    """

    qubit_labels: tuple
    matrix: np.ndarray

    def __post_init__(self):
        labels = tuple(int(q) for q in self.qubit_labels)
        if len(labels) == 0 or len(set(labels)) != len(labels):
            raise ValueError("qubit_labels must be non-empty and distinct")
        m = np.asarray(self.matrix, dtype=complex)
        dim = 2 ** len(labels)
        if m.shape != (dim, dim):
            raise ValueError(f"matrix must be {dim}x{dim} for {len(labels)} qubits, got {m.shape}")
        if np.max(np.abs(m - m.conj().T)) > HERMITICITY_ATOL:
            raise ValueError("matrix is not Hermitian within tolerance")
        if abs(np.trace(m).real - 1.0) > TRACE_ATOL or abs(np.trace(m).imag) > TRACE_ATOL:
            raise ValueError(f"trace {np.trace(m)} deviates from 1 beyond tolerance")
        eigmin = float(np.linalg.eigvalsh(m)[0])
        if eigmin < PSD_FLOOR:
            raise ValueError(f"matrix has eigenvalue {eigmin} below the PSD noise floor")
        m.flags.writeable = False
        object.__setattr__(self, "qubit_labels", labels)
        object.__setattr__(self, "matrix", m)

    @property
    def n_qubits(self) -> int:
        return len(self.qubit_labels)


@dataclass(frozen=True)
class Partition:
    """Ordered pair of disjoint, non-empty qubit index sets."""

    left: frozenset
    right: frozenset

    def __post_init__(self):
        left = frozenset(int(q) for q in self.left)
        right = frozenset(int(q) for q in self.right)
        if not left or not right:
            raise ValueError("both sides of a partition must be non-empty")
        if left & right:
            raise ValueError(f"partition sides overlap: {sorted(left & right)}")
        if any(q < 0 for q in left | right):
            raise ValueError("qubit indices must be non-negative")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)


def state_from_basis_terms(n: int, terms: Sequence) -> PureState:
    """Build a normalized state from ``(bit-string label, coefficient)`` terms.

    Labels are length-``n`` strings over {0, 1}; repeated labels accumulate.
    """
    if not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"n must be in [1, {MAX_QUBITS}], got {n}")
    if not terms:
        raise ValueError("at least one basis term is required")
    amps = np.zeros(2**n, dtype=complex)
    for label, coeff in terms:
        if len(label) != n or any(ch not in "01" for ch in label):
            raise ValueError(f"basis label {label!r} is not a length-{n} bit string")
        amps[int(label, 2)] += complex(coeff)
    norm = np.linalg.norm(amps)
    if norm < 1e-15:
        raise ValueError("coefficients sum to the zero vector")
    return PureState(n, amps / norm)


def partial_trace(state_or_dm: Union[PureState, DensityMatrix], keep: Iterable) -> DensityMatrix:
    """Reduce a state to the qubits in ``keep``, tracing out the rest.

    ``keep`` uses the original qubit indices of the input; the result is
    labeled by ``sorted(keep)``.
    """
    keep = sorted(int(q) for q in keep)
    if not keep:
        raise ValueError("keep set must be non-empty")
    if len(set(keep)) != len(keep):
        raise ValueError("keep set contains duplicates")

    if isinstance(state_or_dm, PureState):
        n = state_or_dm.n_qubits
        unknown = [q for q in keep if q not in range(n)]
        if unknown:
            raise ValueError(f"unknown qubit indices {unknown}")
        drop = [q for q in range(n) if q not in keep]
        tensor = state_or_dm.amplitudes.reshape((2,) * n)
        tensor = np.moveaxis(tensor, keep + drop, range(n))
        m = tensor.reshape(2 ** len(keep), 2 ** len(drop))
        rho = m @ m.conj().T
        rho = (rho + rho.conj().T) / 2
        return DensityMatrix(tuple(keep), rho)

    if isinstance(state_or_dm, DensityMatrix):
        labels = state_or_dm.qubit_labels
        unknown = [q for q in keep if q not in labels]
        if unknown:
            raise ValueError(f"unknown qubit indices {unknown}")
        k = len(labels)
        drop_pos = [i for i, q in enumerate(labels) if q not in keep]
        tensor = state_or_dm.matrix.reshape((2,) * (2 * k))
        remaining = k
        for pos in sorted(drop_pos, reverse=True):
            tensor = np.trace(tensor, axis1=pos, axis2=pos + remaining)
            remaining -= 1
        rho = tensor.reshape(2**remaining, 2**remaining)
        rho = (rho + rho.conj().T) / 2
        return DensityMatrix(tuple(keep), rho)

    raise TypeError(f"expected PureState or DensityMatrix, got {type(state_or_dm).__name__}")


def linear_entropy(dm: DensityMatrix) -> float:
    """Mixedness measure 1 - Tr(rho^2); zero exactly for pure states."""
    purity = float(np.vdot(dm.matrix, dm.matrix).real)
    return max(0.0, 1.0 - purity)


def random_haar_state(n: int, seed) -> PureState:
    """Draw a pure state from the unitarily invariant distribution.

    Normalizing a vector of independent standard complex Gaussians is exactly
    Haar on the unit sphere.  ``seed`` may be an integer, a seed sequence, or
    an existing ``numpy.random.Generator``.
    """
    if not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"n must be in [1, {MAX_QUBITS}], got {n}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    z = rng.standard_normal(2**n) + 1j * rng.standard_normal(2**n)
    return PureState(n, z / np.linalg.norm(z))
