"""Choquet-like aggregation of multivalued data under admissible orders.

The package provides three carriers (scalars, intervals, vectors), total
orders refining their natural partial orders, capacities, a kernel-driven
Choquet-like operator, dissimilarity functions, and grid-enumeration
checks of the algebraic laws characterizing when the operator is well
defined, monotone, or an aggregation function.
"""

from .algebra import (
    BOUNDED_SUM, IV_PLUS, IV_SCALE, MIN_OP, PLUS, TIMES, VV_PLUS, VV_SCALE,
    AdditionOp, MultiplicationOp, add, addition_for, check_associativity,
    check_c1, check_cancellation, check_closure, check_commutativity,
    check_compatibility, check_distributivity, check_zero_sum, fold_add,
    register_addition, register_multiplication, resolve_addition,
    resolve_multiplication, scale, scale_for,
)
from .capacity import (
    Capacity, capacity_family, capacity_from_table, mask_to_subset,
    subset_to_mask, tail_values,
)
from .datasets import Dataset, load_dataset, parse_dataset, serialize_dataset
from .dissimilarity import (
    DissimilarityFn, TelescopingWitness, check_dissimilarity,
    check_telescoping, delta_covers_unit_range, lambda_alpha,
    resolve_dissimilarity, takac_counterexample, takac_dissimilarity,
    takac_dissimilarity_fn,
)
from .errors import (
    AlphaOutOfRange, BadBoundary, BadParameter, ChoquetlikeError,
    DatasetFormatError, HypothesisViolated, KernelRangeError, KindMismatch,
    MissingSubset, NoWitnessFound, NotAdmissiblePermutation, NotMonotone,
    OracleDisagreement, ReconstructionOutOfK, ScaleOutOfRange, TooManyTies,
    UnknownKernel,
)
from .operator import (
    AggregateResult, AggregationInput, EvalOutcome, KernelL, PermutationSet,
    admissible_permutations, affine_f_kernel, b_scale_d_kernel,
    choquet_aggregate, choquet_eval, classical_kernel, delta_scale_kernel,
    f_difference_kernel, kernel_catalog, register_kernel,
)
from .order import (
    INTERVAL, SCALAR, TOL, VECTOR, AdmissibleOrder, AlphaBeta, Element,
    Interval, Scalar, ScalarUsual, Vector, VectorLex, admissible_compare,
    check_admissibility, default_order, dim_of, element_from_json,
    element_to_json, elements_equal, grid_elements, k_alpha, kind_of,
    one_element, parse_order, partial_leq, unit_grid, zero_element,
)
from .reporting import GridSpec, LawReport
from .verifier import (
    brute_force_monotonicity, brute_force_wd, capacity_battery,
    check_aggregation, check_delta_decomposition, check_jensen_f,
    check_monotonicity, check_wd, oracle_crosscheck,
)

__version__ = "0.1.0"
