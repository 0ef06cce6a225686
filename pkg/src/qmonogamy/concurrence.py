"""Concurrence-family entanglement measures.

For a pure state split across a bipartition, the concurrence is
``sqrt(2 (1 - Tr rho_left^2))``.  For two-qubit mixed states the closed forms
of the convex-roof minimum (Wootters) and maximum (concurrence of assistance)
are both functions of the same spectrum: the descending square roots
``lambda_i`` of the eigenvalues of ``rho @ spin_flip(rho)``.
"""

from __future__ import annotations

import numpy as np

from .states import DensityMatrix, Partition, PureState, linear_entropy, partial_trace

SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
SPIN_FLIP_YY = np.kron(SIGMA_Y, SIGMA_Y).real  # real symmetric 4x4

# Eigenvalues of a density matrix below this cutoff are treated as exact
# zeros so that square roots never amplify O(1e-16) noise into O(1e-8).
RANK_CUTOFF = 1e-12


def spin_flip(dm: DensityMatrix) -> np.ndarray:
    """Two-qubit spin-flipped matrix (sigma_y x sigma_y) rho* (sigma_y x sigma_y)."""
    if dm.n_qubits != 2:
        raise ValueError(f"spin flip is defined for 2 qubits, got {dm.n_qubits}")
    return SPIN_FLIP_YY @ dm.matrix.conj() @ SPIN_FLIP_YY


def _cleaned_root(matrix: np.ndarray):
    """Eigenvectors scaled by sqrt of eigenvalues, zero modes dropped."""
    w, u = np.linalg.eigh((matrix + matrix.conj().T) / 2)
    keep = w > RANK_CUTOFF
    return u[:, keep] * np.sqrt(w[keep])


def tau_matrix(matrix: np.ndarray) -> np.ndarray:
    """Symmetric matrix tau_jk = sqrt(mu_j mu_k) <e_j*|YY|e_k> on the support of rho.

    Its singular values are the lambda spectrum of the two-qubit closed
    forms, and ``sum_i |(V tau V^T)_ii|`` is the ensemble-average pure-state
    concurrence of the decomposition encoded by the isometry ``V``.
    """
    b = _cleaned_root(matrix)
    return b.T @ SPIN_FLIP_YY @ b


def lambda_spectrum(dm: DensityMatrix) -> np.ndarray:
    """Descending lambda_i, padded with zeros to length 4."""
    if dm.n_qubits != 2:
        raise ValueError(f"lambda spectrum is defined for 2 qubits, got {dm.n_qubits}")
    s = np.linalg.svd(tau_matrix(dm.matrix), compute_uv=False)
    out = np.zeros(4)
    out[: len(s)] = s
    return out


def wootters_concurrence(dm: DensityMatrix) -> float:
    """Two-qubit mixed-state concurrence max(0, l1 - l2 - l3 - l4)."""
    l = lambda_spectrum(dm)
    return float(max(0.0, l[0] - l[1] - l[2] - l[3]))


def concurrence_of_assistance(dm: DensityMatrix) -> float:
    """Two-qubit concurrence of assistance l1 + l2 + l3 + l4."""
    return float(np.sum(lambda_spectrum(dm)))


def concurrence_pure(state: PureState, partition: Partition) -> float:
    """Bipartite concurrence of a pure state across ``partition``.

    The partition must cover every qubit of the state.  The reduction is
    taken over the smaller side; the value is symmetric in the two sides.
    """
    n = state.n_qubits
    if partition.left | partition.right != frozenset(range(n)):
        raise ValueError("partition must cover all qubits of the state")
    side = min(partition.left, partition.right, key=len)
    rho = partial_trace(state, side)
    return float(np.sqrt(2.0 * linear_entropy(rho)))


def pure_concurrence_sq(state: PureState, left) -> float:
    """Squared concurrence of ``left`` versus the remaining qubits."""
    n = state.n_qubits
    left = frozenset(left)
    right = frozenset(range(n)) - left
    side = left if len(left) <= len(right) else right
    return 2.0 * linear_entropy(partial_trace(state, side))


def three_tangle(state: PureState, focus: int) -> float:
    """Residual tangle C^2(focus|rest) - C^2(pair 1) - C^2(pair 2) of a 3-qubit pure state.

    Permutation invariant over the focus choice for pure states.
    """
    if state.n_qubits != 3:
        raise ValueError(f"three-tangle is defined for 3 qubits, got {state.n_qubits}")
    if focus not in (0, 1, 2):
        raise ValueError(f"focus must be a qubit index in 0..2, got {focus}")
    others = [q for q in range(3) if q != focus]
    total = pure_concurrence_sq(state, [focus])
    for other in others:
        total -= wootters_concurrence(partial_trace(state, [focus, other])) ** 2
    return float(total)
