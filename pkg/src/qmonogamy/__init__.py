"""Concurrence-based entanglement measures and monogamy bounds for N-qubit pure states."""

from .concurrence import (
    concurrence_of_assistance,
    concurrence_pure,
    lambda_spectrum,
    pure_concurrence_sq,
    spin_flip,
    three_tangle,
    wootters_concurrence,
)
from .convex_roof import EnsembleDecomposition, convex_roof_optimize
from .monogamy import (
    BoundEntry,
    BoundReport,
    TriangleVectors,
    ab_rest_lower,
    ab_rest_upper,
    abc_rest_lower_diff,
    abc_rest_lower_hub,
    abc_rest_upper,
    concurrence_chain,
    evaluate_all,
    is_weight1_supported,
    triangle_vectors,
    wclass_bounds,
    wclass_state,
)
from .statefile import StateFileError, parse_state, read_state_file, serialize_state, write_state_file
from .states import (
    MAX_QUBITS,
    DensityMatrix,
    Partition,
    PureState,
    linear_entropy,
    partial_trace,
    random_haar_state,
    state_from_basis_terms,
)

__all__ = [
    "MAX_QUBITS",
    "BoundEntry",
    "BoundReport",
    "DensityMatrix",
    "EnsembleDecomposition",
    "Partition",
    "PureState",
    "StateFileError",
    "TriangleVectors",
    "ab_rest_lower",
    "ab_rest_upper",
    "abc_rest_lower_diff",
    "abc_rest_lower_hub",
    "abc_rest_upper",
    "concurrence_chain",
    "concurrence_of_assistance",
    "concurrence_pure",
    "convex_roof_optimize",
    "evaluate_all",
    "is_weight1_supported",
    "lambda_spectrum",
    "linear_entropy",
    "parse_state",
    "partial_trace",
    "pure_concurrence_sq",
    "random_haar_state",
    "read_state_file",
    "serialize_state",
    "spin_flip",
    "state_from_basis_terms",
    "three_tangle",
    "triangle_vectors",
    "wclass_bounds",
    "wclass_state",
    "wootters_concurrence",
    "write_state_file",
]

__version__ = "0.1.0"
