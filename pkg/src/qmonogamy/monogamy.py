"""Monogamy bounds on the squared concurrence of N-qubit pure states.

Subsystem roles are fixed by qubit position: qubit 0 is A, qubit 1 is B and
qubit ``i + 1`` is C_i.  Callers wanting a different role assignment permute
their amplitudes first.  Lower-bound evaluators return the raw signed value;
a clamped-at-zero reading is reported alongside it in ``evaluate_all`` since
a negative lower bound carries no information beyond C^2 >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .concurrence import (
    concurrence_of_assistance,
    pure_concurrence_sq,
    wootters_concurrence,
)
from .states import MAX_QUBITS, PureState, linear_entropy, partial_trace

WEIGHT1_SUPPORT_ATOL = 1e-12
DEFAULT_TOLERANCE = 1e-7
TRIANGLE_DEGENERATE_EPS = 1e-12


def _pair_measures(state: PureState, pairs):
    """Squared concurrence and squared assistance for each requested pair."""
    out = {}
    for i, j in pairs:
        dm = partial_trace(state, [i, j])
        out[(i, j)] = (
            wootters_concurrence(dm) ** 2,
            concurrence_of_assistance(dm) ** 2,
        )
    return out


def _require_qubits(state: PureState, minimum: int, what: str):
    if state.n_qubits < minimum:
        raise ValueError(f"{what} needs at least {minimum} qubits, got {state.n_qubits}")


def ab_rest_lower(state: PureState) -> float:
    """Lower bound on C^2(AB|rest) from pairwise concurrence/assistance gaps.

    Raw value of max over the two difference sums; may be negative.
    """
    _require_qubits(state, 3, "the AB-versus-rest lower bound")
    cs = range(2, state.n_qubits)
    table = _pair_measures(state, [(a, c) for a in (0, 1) for c in cs])
    sum_a = sum(table[(0, c)][0] - table[(1, c)][1] for c in cs)
    sum_b = sum(table[(1, c)][0] - table[(0, c)][1] for c in cs)
    return float(max(sum_a, sum_b))


def ab_rest_upper(state: PureState) -> float:
    """Upper bound on C^2(AB|rest) from the assistance of AB and all AB-C_i pairs."""
    _require_qubits(state, 3, "the AB-versus-rest upper bound")
    cs = range(2, state.n_qubits)
    table = _pair_measures(state, [(0, 1)] + [(a, c) for a in (0, 1) for c in cs])
    total = 2.0 * table[(0, 1)][1]
    total += sum(table[(0, c)][1] + table[(1, c)][1] for c in cs)
    return float(total)


def concurrence_chain(state: PureState):
    """Triangle chain (|a-b|, c, a+b) with a = C^2(A|rest), b = C^2(B|rest), c = C^2(AB|rest)."""
    _require_qubits(state, 3, "the concurrence chain")
    a = pure_concurrence_sq(state, [0])
    b = pure_concurrence_sq(state, [1])
    c = pure_concurrence_sq(state, [0, 1])
    return abs(a - b), c, a + b


@dataclass(frozen=True)
class TriangleVectors:
    """Planar vectors with |a_vec| = a, |b_vec| = b, |c_vec| = c and a_vec + b_vec = c_vec."""

    a_vec: tuple
    b_vec: tuple
    c_vec: tuple


def triangle_vectors(state: PureState) -> TriangleVectors:
    """Realize the chain values as side lengths of a closed planar triangle.

    ``c_vec`` is laid along the first axis.  When c vanishes the chain forces
    a = b, and the construction degenerates to an antiparallel pair.
    """
    _require_qubits(state, 3, "the triangle construction")
    a = pure_concurrence_sq(state, [0])
    b = pure_concurrence_sq(state, [1])
    c = pure_concurrence_sq(state, [0, 1])
    if c <= TRIANGLE_DEGENERATE_EPS:
        a_vec = (a, 0.0)
        c_vec = (0.0, 0.0)
    else:
        ax = (c * c + a * a - b * b) / (2.0 * c)
        disc = a * a - ax * ax
        if disc < -1e-12:
            raise ValueError(f"triangle infeasible: discriminant {disc}")
        a_vec = (ax, float(np.sqrt(max(0.0, disc))))
        c_vec = (c, 0.0)
    b_vec = (c_vec[0] - a_vec[0], c_vec[1] - a_vec[1])
    return TriangleVectors(a_vec, b_vec, c_vec)


def abc_rest_lower_diff(state: PureState) -> float:
    """Raw lower bound on C^2(ABC1|rest): the AB-versus-rest bound minus C1's assistance total."""
    _require_qubits(state, 4, "the ABC1-versus-rest bounds")
    hub_partners = [0, 1] + list(range(3, state.n_qubits))
    table = _pair_measures(state, [(2, j) for j in hub_partners])
    return float(ab_rest_lower(state) - sum(table[(2, j)][1] for j in hub_partners))


def abc_rest_lower_hub(state: PureState) -> float:
    """Raw lower bound on C^2(ABC1|rest) from C1's pair concurrences minus A/B assistance totals."""
    _require_qubits(state, 4, "the ABC1-versus-rest bounds")
    n = state.n_qubits
    cs = range(2, n)
    pairs = [(0, 2), (1, 2), (0, 1)]
    pairs += [(2, c) for c in cs if c != 2]
    pairs += [(a, c) for a in (0, 1) for c in cs]
    table = _pair_measures(state, set(pairs))
    total = table[(0, 2)][0] + table[(1, 2)][0]
    total += sum(table[(2, c)][0] for c in cs if c != 2)
    total -= 2.0 * table[(0, 1)][1]
    total -= sum(table[(0, c)][1] + table[(1, c)][1] for c in cs)
    return float(total)


def abc_rest_upper(state: PureState) -> float:
    """Upper bound on C^2(ABC1|rest): the AB-versus-rest upper bound plus C1's assistance total."""
    _require_qubits(state, 4, "the ABC1-versus-rest bounds")
    hub_partners = [0, 1] + list(range(3, state.n_qubits))
    table = _pair_measures(state, [(2, j) for j in hub_partners])
    return float(ab_rest_upper(state) + sum(table[(2, j)][1] for j in hub_partners))


def wclass_state(coefficients) -> PureState:
    """State supported on Hamming-weight-1 basis labels with the given amplitudes."""
    coeffs = np.asarray(list(coefficients), dtype=complex)
    n = len(coeffs)
    if n < 3:
        raise ValueError(f"at least 3 coefficients are required, got {n}")
    if n > MAX_QUBITS:
        raise ValueError(f"at most {MAX_QUBITS} coefficients are supported, got {n}")
    if abs(np.sum(np.abs(coeffs) ** 2) - 1.0) > 1e-10:
        raise ValueError("coefficients must be normalized to unit total weight")
    amps = np.zeros(2**n, dtype=complex)
    for i, c in enumerate(coeffs):
        amps[1 << (n - 1 - i)] = c
    return PureState(n, amps)


def is_weight1_supported(state: PureState) -> bool:
    """True when all amplitude weight sits on Hamming-weight-1 basis labels."""
    weight1 = [1 << k for k in range(state.n_qubits)]
    off = np.delete(state.amplitudes, weight1)
    return bool(np.max(np.abs(off), initial=0.0) <= WEIGHT1_SUPPORT_ATOL)


def wclass_bounds(state: PureState, i: int, j: int):
    """Two-sided bound chain (lower, mid, upper) on C^2(A_i A_j | rest).

    Only valid on weight-1-supported states, where every two-qubit marginal
    has equal concurrence and assistance, so the general bounds collapse to
    pairwise concurrences alone.
    """
    n = state.n_qubits
    if not 0 <= i < j < n:
        raise ValueError(f"need 0 <= i < j < {n}, got ({i}, {j})")
    if not is_weight1_supported(state):
        raise ValueError("state is not supported on Hamming-weight-1 basis labels")
    others = [t for t in range(n) if t not in (i, j)]
    table = _pair_measures(state, [(i, j)] + [tuple(sorted((x, t))) for x in (i, j) for t in others])

    def csq(x, t):
        return table[tuple(sorted((x, t)))][0]

    lower = abs(sum(csq(i, t) - csq(j, t) for t in others))
    mid = pure_concurrence_sq(state, [i, j])
    upper = 2.0 * table[(i, j)][0] + sum(csq(i, t) + csq(j, t) for t in others)
    return float(lower), float(mid), float(upper)


def role_name(q: int) -> str:
    return "A" if q == 0 else "B" if q == 1 else f"C{q - 1}"


@dataclass(frozen=True)
class BoundEntry:
    """One inequality instance, stated as lhs <= rhs with slack = rhs - lhs."""

    inequality: str
    lhs: float
    rhs: float
    slack: float
    satisfied: bool


@dataclass(frozen=True)
class BoundReport:
    state_id: str
    n_qubits: int
    tolerance: float
    entries: tuple
    components: dict = field(compare=False)

    def all_satisfied(self) -> bool:
        return all(e.satisfied for e in self.entries)

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.inequality == name:
                return e
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "state_id": self.state_id,
            "n_qubits": self.n_qubits,
            "tolerance": self.tolerance,
            "entries": [
                {
                    "inequality": e.inequality,
                    "lhs": e.lhs,
                    "rhs": e.rhs,
                    "slack": e.slack,
                    "satisfied": e.satisfied,
                }
                for e in self.entries
            ],
            "components": self.components,
        }


def evaluate_all(state: PureState, tolerance: float = DEFAULT_TOLERANCE, state_id: str = "state") -> BoundReport:
    """Evaluate every bound applicable at the state's size and report slack.

    Entries use the convention lhs <= rhs, slack = rhs - lhs, satisfied iff
    slack >= -tolerance.  Raw and clamped readings of the signed lower bounds
    are reported separately.
    """
    n = state.n_qubits
    _require_qubits(state, 3, "bound evaluation")
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")

    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    table = _pair_measures(state, pairs)
    components = {
        f"{role_name(i)}-{role_name(j)}": {
            "concurrence_sq": table[(i, j)][0],
            "assistance_sq": table[(i, j)][1],
        }
        for i, j in pairs
    }

    singles = {q: linear_entropy(partial_trace(state, [q])) for q in range(n)}
    doubles = {(i, j): linear_entropy(partial_trace(state, [i, j])) for i, j in pairs}

    mid_ab = pure_concurrence_sq(state, [0, 1])
    a_sq = pure_concurrence_sq(state, [0])
    b_sq = pure_concurrence_sq(state, [1])

    entries = []

    def add(name, lhs, rhs):
        slack = rhs - lhs
        entries.append(BoundEntry(name, float(lhs), float(rhs), float(slack), bool(slack >= -tolerance)))

    add("ab_rest_lower", ab_rest_lower(state), mid_ab)
    add("ab_rest_upper", mid_ab, ab_rest_upper(state))
    add("chain_lower", abs(a_sq - b_sq), mid_ab)
    add("chain_upper", mid_ab, a_sq + b_sq)
    add("dual_assist", a_sq, sum(table[(0, j)][1] for j in range(1, n)))
    add("ckw", sum(table[(0, j)][0] for j in range(1, n)), a_sq)

    # linear-entropy triangle, worst pair of each side
    lo_worst = min(
        (doubles[(i, j)] - abs(singles[i] - singles[j]), (i, j)) for i, j in pairs
    )
    hi_worst = min(
        (singles[i] + singles[j] - doubles[(i, j)], (i, j)) for i, j in pairs
    )
    i, j = lo_worst[1]
    add("lin_entropy_lower", abs(singles[i] - singles[j]), doubles[(i, j)])
    i, j = hi_worst[1]
    add("lin_entropy_upper", doubles[(i, j)], singles[i] + singles[j])

    if n >= 4:
        mid_abc = pure_concurrence_sq(state, [0, 1, 2])
        diff = abc_rest_lower_diff(state)
        hub = abc_rest_lower_hub(state)
        add("abc_rest_lower_diff", diff, mid_abc)
        add("abc_rest_lower_diff_clamped", max(0.0, diff), mid_abc)
        add("abc_rest_lower_hub", hub, mid_abc)
        add("abc_rest_lower_hub_clamped", max(0.0, hub), mid_abc)
        add("abc_rest_upper", mid_abc, abc_rest_upper(state))

    if is_weight1_supported(state):
        lo_w, hi_w = None, None
        for i, j in pairs:
            lower, mid, upper = wclass_bounds(state, i, j)
            if lo_w is None or mid - lower < lo_w[0] - lo_w[1]:
                lo_w = (mid, lower)
            if hi_w is None or upper - mid < hi_w[1] - hi_w[0]:
                hi_w = (mid, upper)
        add("wclass_lower", lo_w[1], lo_w[0])
        add("wclass_upper", hi_w[0], hi_w[1])

    return BoundReport(state_id, n, tolerance, tuple(entries), components)
