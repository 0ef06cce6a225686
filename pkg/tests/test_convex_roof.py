import numpy as np
import pytest

from qmonogamy import (
    DensityMatrix,
    concurrence_of_assistance,
    convex_roof_optimize,
    partial_trace,
    state_from_basis_terms,
    wootters_concurrence,
)

ORACLE_ATOL = 1e-3


def random_two_qubit_mixed(rng, rank):
    m = np.zeros((4, 4), dtype=complex)
    for _ in range(rank):
        v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        m += rng.uniform(0.2, 1.0) * np.outer(v, v.conj())
    m /= np.trace(m).real
    return DensityMatrix((0, 1), m)


def test_pure_bell_input_single_member():
    bell = state_from_basis_terms(2, [("00", 1), ("11", 1)])
    rho = partial_trace(bell, [0, 1])
    for mode in ("minimize", "maximize"):
        value, decomposition = convex_roof_optimize(rho, mode, seed=3)
        assert value == pytest.approx(1.0, abs=1e-10)
        assert len(decomposition.members) == 1


def test_maximally_mixed_minimize_zero():
    dm = DensityMatrix((0, 1), np.eye(4, dtype=complex) / 4)
    value, decomposition = convex_roof_optimize(dm, "minimize", seed=11)
    assert value == pytest.approx(0.0, abs=ORACLE_ATOL)
    assert decomposition.reconstruction_error(dm) < 1e-8


def test_maximally_mixed_maximize_one():
    dm = DensityMatrix((0, 1), np.eye(4, dtype=complex) / 4)
    value, decomposition = convex_roof_optimize(dm, "maximize", seed=11)
    assert value == pytest.approx(1.0, abs=ORACLE_ATOL)
    assert decomposition.reconstruction_error(dm) < 1e-8


def test_ghz_marginal_both_modes():
    ghz = state_from_basis_terms(3, [("000", 1), ("111", 1)])
    rho = partial_trace(ghz, [0, 1])
    assert convex_roof_optimize(rho, "minimize", seed=5)[0] == pytest.approx(0.0, abs=ORACLE_ATOL)
    assert convex_roof_optimize(rho, "maximize", seed=5)[0] == pytest.approx(1.0, abs=ORACLE_ATOL)


def test_w3_marginal_min_equals_max():
    w3 = state_from_basis_terms(3, [("100", 1), ("010", 1), ("001", 1)])
    rho = partial_trace(w3, [0, 1])
    assert convex_roof_optimize(rho, "minimize", seed=5)[0] == pytest.approx(2 / 3, abs=ORACLE_ATOL)
    assert convex_roof_optimize(rho, "maximize", seed=5)[0] == pytest.approx(2 / 3, abs=ORACLE_ATOL)


def test_value_is_the_decomposition_average():
    dm = random_two_qubit_mixed(np.random.default_rng(8), 3)
    value, decomposition = convex_roof_optimize(dm, "maximize", seed=8)
    assert value == pytest.approx(decomposition.average_concurrence(), abs=1e-12)


def test_deterministic_for_fixed_seed():
    dm = random_two_qubit_mixed(np.random.default_rng(21), 3)
    a = convex_roof_optimize(dm, "minimize", seed=77)[0]
    b = convex_roof_optimize(dm, "minimize", seed=77)[0]
    assert a == b


def test_ensemble_size_bounds():
    dm = random_two_qubit_mixed(np.random.default_rng(4), 4)
    with pytest.raises(ValueError, match="ensemble size"):
        convex_roof_optimize(dm, "minimize", ensemble_size=3, seed=0)
    with pytest.raises(ValueError, match="ensemble size"):
        convex_roof_optimize(dm, "minimize", ensemble_size=9, seed=0)
    value, decomposition = convex_roof_optimize(dm, "maximize", ensemble_size=6, seed=0)
    assert len(decomposition.members) <= 6
    assert value == pytest.approx(concurrence_of_assistance(dm), abs=ORACLE_ATOL)


def test_mode_validated():
    dm = DensityMatrix((0, 1), np.eye(4, dtype=complex) / 4)
    with pytest.raises(ValueError, match="mode"):
        convex_roof_optimize(dm, "extremize", seed=0)


def test_two_qubits_required():
    dm = DensityMatrix((0,), np.eye(2, dtype=complex) / 2)
    with pytest.raises(ValueError, match="2-qubit"):
        convex_roof_optimize(dm, "minimize", seed=0)


def test_local_unitary_invariance_at_oracle_tolerance():
    rng = np.random.default_rng(3141)
    dm = random_two_qubit_mixed(rng, 3)
    locals_ = []
    for _ in range(2):
        z = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        q, r = np.linalg.qr(z)
        locals_.append(q * (np.diag(r) / np.abs(np.diag(r))))
    u = np.kron(locals_[0], locals_[1])
    rotated = DensityMatrix((0, 1), u @ dm.matrix @ u.conj().T)
    for mode in ("minimize", "maximize"):
        a = convex_roof_optimize(dm, mode, seed=9)[0]
        b = convex_roof_optimize(rotated, mode, seed=10)[0]
        assert abs(a - b) <= 2 * ORACLE_ATOL


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_agreement_with_closed_forms_per_rank(rank):
    rng = np.random.default_rng(1000 + rank)
    for trial in range(8):
        dm = random_two_qubit_mixed(rng, rank)
        seed = 31 * rank + trial
        vmin, dec_min = convex_roof_optimize(dm, "minimize", seed=seed)
        vmax, dec_max = convex_roof_optimize(dm, "maximize", seed=seed)
        assert abs(vmin - wootters_concurrence(dm)) <= ORACLE_ATOL
        assert abs(vmax - concurrence_of_assistance(dm)) <= ORACLE_ATOL
        assert dec_min.reconstruction_error(dm) < 1e-8
        assert dec_max.reconstruction_error(dm) < 1e-8
        probs = [p for p, _ in dec_min.members]
        assert sum(probs) == pytest.approx(1.0, abs=1e-10)
