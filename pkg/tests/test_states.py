import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qmonogamy import (
    DensityMatrix,
    Partition,
    PureState,
    linear_entropy,
    partial_trace,
    random_haar_state,
    state_from_basis_terms,
)

INV_SQRT2 = 1 / np.sqrt(2)


class TestStateFromBasisTerms:
    def test_two_term_superposition(self):
        state = state_from_basis_terms(4, [("0000", 1), ("1001", 1)])
        expected = np.zeros(16, dtype=complex)
        expected[0] = expected[9] = INV_SQRT2
        np.testing.assert_allclose(state.amplitudes, expected, atol=1e-15)

    def test_single_basis_state(self):
        state = state_from_basis_terms(1, [("0", 1)])
        np.testing.assert_allclose(state.amplitudes, [1, 0], atol=1e-15)

    def test_bell_state(self):
        state = state_from_basis_terms(2, [("00", 1), ("11", 1)])
        np.testing.assert_allclose(state.amplitudes, [INV_SQRT2, 0, 0, INV_SQRT2], atol=1e-15)

    def test_label_length_mismatch_rejected(self):
        with pytest.raises(ValueError, match="bit string"):
            state_from_basis_terms(3, [("00", 1)])

    def test_non_binary_label_rejected(self):
        with pytest.raises(ValueError, match="bit string"):
            state_from_basis_terms(2, [("02", 1)])

    def test_zero_coefficients_rejected(self):
        with pytest.raises(ValueError, match="zero"):
            state_from_basis_terms(2, [("00", 1), ("00", -1)])

    def test_empty_terms_rejected(self):
        with pytest.raises(ValueError):
            state_from_basis_terms(2, [])

    def test_repeated_labels_accumulate(self):
        state = state_from_basis_terms(1, [("0", 1), ("0", 1), ("1", 2)])
        np.testing.assert_allclose(np.abs(state.amplitudes), [1 / np.sqrt(2), 1 / np.sqrt(2)], atol=1e-15)


class TestPureStateInvariants:
    def test_wrong_length_rejected(self):
        with pytest.raises(ValueError, match="length"):
            PureState(2, np.array([1.0, 0.0]))

    def test_unnormalized_rejected(self):
        with pytest.raises(ValueError, match="norm"):
            PureState(1, np.array([0.5, 0.0]))

    def test_qubit_budget_enforced(self):
        with pytest.raises(ValueError):
            state_from_basis_terms(13, [("0" * 13, 1)])

    def test_amplitudes_read_only(self):
        state = state_from_basis_terms(1, [("0", 1)])
        with pytest.raises(ValueError):
            state.amplitudes[0] = 0.0


class TestDensityMatrixInvariants:
    def test_non_hermitian_rejected(self):
        m = np.array([[0.5, 0.1], [0.3, 0.5]], dtype=complex)
        with pytest.raises(ValueError, match="Hermitian"):
            DensityMatrix((0,), m)

    def test_bad_trace_rejected(self):
        with pytest.raises(ValueError, match="trace"):
            DensityMatrix((0,), np.eye(2, dtype=complex))

    def test_negative_eigenvalue_rejected(self):
        m = np.diag([1.5, -0.5]).astype(complex)
        with pytest.raises(ValueError, match="PSD"):
            DensityMatrix((0,), m)

    def test_noise_floor_tolerated(self):
        m = np.diag([1.0 + 5e-11, -5e-11]).astype(complex)
        dm = DensityMatrix((0,), m)
        assert dm.n_qubits == 1


class TestPartition:
    def test_disjoint_required(self):
        with pytest.raises(ValueError, match="overlap"):
            Partition(frozenset({0, 1}), frozenset({1, 2}))

    def test_non_empty_required(self):
        with pytest.raises(ValueError, match="non-empty"):
            Partition(frozenset(), frozenset({0}))


class TestPartialTrace:
    def test_bell_marginal_maximally_mixed(self):
        bell = state_from_basis_terms(2, [("00", 1), ("11", 1)])
        rho = partial_trace(bell, [0])
        np.testing.assert_allclose(rho.matrix, np.eye(2) / 2, atol=1e-14)

    def test_product_state_marginal(self):
        state = state_from_basis_terms(2, [("01", 1)])
        rho = partial_trace(state, [0])
        np.testing.assert_allclose(rho.matrix, np.diag([1.0, 0.0]), atol=1e-14)

    def test_three_qubit_marginal_of_saturating_state(self):
        state = state_from_basis_terms(4, [("0000", 1), ("1001", 1)])
        rho = partial_trace(state, [1, 2, 3])
        expected = np.zeros((8, 8), dtype=complex)
        expected[0, 0] = expected[1, 1] = 0.5
        np.testing.assert_allclose(rho.matrix, expected, atol=1e-14)
        assert rho.qubit_labels == (1, 2, 3)

    def test_empty_keep_rejected(self):
        bell = state_from_basis_terms(2, [("00", 1), ("11", 1)])
        with pytest.raises(ValueError, match="non-empty"):
            partial_trace(bell, [])

    def test_unknown_index_rejected(self):
        bell = state_from_basis_terms(2, [("00", 1), ("11", 1)])
        with pytest.raises(ValueError, match="unknown"):
            partial_trace(bell, [5])

    def test_density_matrix_input(self):
        ghz = state_from_basis_terms(3, [("000", 1), ("111", 1)])
        rho3 = partial_trace(ghz, [0, 1, 2])
        via_dm = partial_trace(rho3, [0, 1])
        via_state = partial_trace(ghz, [0, 1])
        np.testing.assert_allclose(via_dm.matrix, via_state.matrix, atol=1e-13)

    @given(seed=st.integers(0, 10**9), n=st.integers(3, 5), data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_staged_equals_single_stage(self, seed, n, data):
        keep = sorted(data.draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=n - 1)))
        extra = data.draw(st.sets(st.integers(0, n - 1)))
        mid = sorted(set(keep) | extra)
        state = random_haar_state(n, seed)
        staged = partial_trace(partial_trace(state, mid), keep)
        direct = partial_trace(state, keep)
        np.testing.assert_allclose(staged.matrix, direct.matrix, atol=1e-12)

    @given(seed=st.integers(0, 10**9), n=st.integers(2, 6))
    @settings(max_examples=40, deadline=None)
    def test_marginal_trace_is_one(self, seed, n):
        state = random_haar_state(n, seed)
        for q in range(n):
            rho = partial_trace(state, [q])
            assert abs(np.trace(rho.matrix) - 1.0) < 1e-12


class TestLinearEntropy:
    def test_pure_projector_zero(self):
        state = state_from_basis_terms(2, [("01", 1)])
        rho = partial_trace(state, [0, 1])
        assert linear_entropy(rho) == pytest.approx(0.0, abs=1e-12)

    def test_maximally_mixed_qubit(self):
        dm = DensityMatrix((0,), np.eye(2, dtype=complex) / 2)
        assert linear_entropy(dm) == pytest.approx(0.5, abs=1e-15)

    def test_maximally_mixed_two_qubits(self):
        dm = DensityMatrix((0, 1), np.eye(4, dtype=complex) / 4)
        assert linear_entropy(dm) == pytest.approx(0.75, abs=1e-15)

    @given(seed=st.integers(0, 10**9), n=st.integers(2, 6), data=st.data())
    @settings(max_examples=50, deadline=None)
    def test_complementary_marginals_equal(self, seed, n, data):
        left = sorted(data.draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=n - 1)))
        right = [q for q in range(n) if q not in left]
        state = random_haar_state(n, seed)
        t_left = linear_entropy(partial_trace(state, left))
        t_right = linear_entropy(partial_trace(state, right))
        assert abs(t_left - t_right) < 1e-10

    @given(seed=st.integers(0, 10**9), n=st.integers(3, 6), data=st.data())
    @settings(max_examples=50, deadline=None)
    def test_two_qubit_triangle(self, seed, n, data):
        i = data.draw(st.integers(0, n - 1))
        j = data.draw(st.integers(0, n - 1).filter(lambda x: x != i))
        state = random_haar_state(n, seed)
        t_i = linear_entropy(partial_trace(state, [i]))
        t_j = linear_entropy(partial_trace(state, [j]))
        t_ij = linear_entropy(partial_trace(state, [i, j]))
        assert t_ij >= abs(t_i - t_j) - 1e-9
        assert t_ij <= t_i + t_j + 1e-9


class TestRandomHaarState:
    def test_deterministic_for_fixed_seed(self):
        a = random_haar_state(3, 424242)
        b = random_haar_state(3, 424242)
        np.testing.assert_array_equal(a.amplitudes, b.amplitudes)

    def test_unit_norm(self):
        state = random_haar_state(1, 7)
        assert abs(np.linalg.norm(state.amplitudes) - 1.0) < 1e-12

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            random_haar_state(0, 1)
        with pytest.raises(ValueError):
            random_haar_state(13, 1)

    def test_mean_marginal_purity_two_qubits(self):
        # mean Tr(rho_A^2) over the invariant measure at n = 2 is
        # (d_A + d_B) / (d_A d_B + 1) = 4/5; pinned by a 10^6-sample run
        rng = np.random.default_rng(2718)
        total = 0.0
        samples = 10_000
        for _ in range(samples):
            state = random_haar_state(2, rng)
            rho = partial_trace(state, [0])
            total += 1.0 - linear_entropy(rho)
        assert total / samples == pytest.approx(0.8, abs=0.01)
