"""Exact classification of sign patterns and orders of moduli for
hyperbolic polynomials, with certified rational witnesses, named
impossibility filters, counting identities, and the Sylvester
resultant factorization R = const * a0 * R0^2."""

from .classify import (
    CLASSIFY_BOUND,
    ClassificationTable,
    SearchConfig,
    classify_degree,
    realization_survey,
    search_witness,
    star_counts,
    star_details,
)
from .counting import (
    binomial_second_difference,
    catalan,
    chi,
    interlacing_couples,
    satisfies_interlacing,
    second_difference_zero_positions,
    t_dc_bruteforce,
    t_dc_catalan_sum,
    t_dc_closed,
)
from .filters import (
    FILTER_IDS,
    FILTERS,
    RealizationStatus,
    apply_filters,
    filter_is_cited,
    soundness_fuzz,
)
from .multipoly import MultivariatePolynomial, det_fraction_free
from .patterns import (
    ChangePreservationPattern,
    Couple,
    Decomposition,
    ModuliOrder,
    SignPattern,
    apply_involution,
    canonical_order_of,
    cpp_to_sp,
    forced_pattern_of_rigid,
    is_canonical_pattern,
    is_rigid_order,
    iter_compatible_couples,
    iter_cpps,
    iter_orders,
    iter_sign_patterns,
    mirror_sign_pattern,
    orbit_of,
    sp_to_cpp,
    superposition_decompose,
)
from .reference_tables import (
    TABLE_BOUND,
    is_table_realizable,
    realizable_table,
    table_ratio,
    table_realizable_count,
)
from .resultants import (
    BlockReductionTrace,
    FactorizationReport,
    RationalMatrix,
    StructuralReport,
    block_reduction_trace,
    claimed_constant,
    coefficient_weights,
    even_odd_split,
    r0_symbolic,
    r0_value,
    r_full,
    structural_checks,
    sylvester_matrix,
    verify_factorization,
)
from .witnesses import (
    BudgetExhausted,
    ModulusTie,
    NotAchievable,
    RationalPolynomial,
    RootConfiguration,
    ZeroCoefficient,
    construct_canonical_witness,
    couple_of,
    expand_from_roots,
    perturb_multiple_roots,
)

__all__ = [
    "BlockReductionTrace",
    "BudgetExhausted",
    "CLASSIFY_BOUND",
    "ChangePreservationPattern",
    "ClassificationTable",
    "Couple",
    "Decomposition",
    "FILTERS",
    "FILTER_IDS",
    "FactorizationReport",
    "ModuliOrder",
    "ModulusTie",
    "MultivariatePolynomial",
    "NotAchievable",
    "RationalMatrix",
    "RationalPolynomial",
    "RealizationStatus",
    "RootConfiguration",
    "SearchConfig",
    "SignPattern",
    "StructuralReport",
    "TABLE_BOUND",
    "ZeroCoefficient",
    "apply_filters",
    "apply_involution",
    "binomial_second_difference",
    "block_reduction_trace",
    "canonical_order_of",
    "catalan",
    "chi",
    "claimed_constant",
    "classify_degree",
    "coefficient_weights",
    "construct_canonical_witness",
    "couple_of",
    "cpp_to_sp",
    "det_fraction_free",
    "even_odd_split",
    "expand_from_roots",
    "filter_is_cited",
    "forced_pattern_of_rigid",
    "interlacing_couples",
    "is_canonical_pattern",
    "is_rigid_order",
    "is_table_realizable",
    "iter_compatible_couples",
    "iter_cpps",
    "iter_orders",
    "iter_sign_patterns",
    "mirror_sign_pattern",
    "orbit_of",
    "perturb_multiple_roots",
    "r0_symbolic",
    "r0_value",
    "r_full",
    "realizable_table",
    "realization_survey",
    "satisfies_interlacing",
    "search_witness",
    "second_difference_zero_positions",
    "soundness_fuzz",
    "sp_to_cpp",
    "star_counts",
    "star_details",
    "structural_checks",
    "superposition_decompose",
    "sylvester_matrix",
    "t_dc_bruteforce",
    "t_dc_catalan_sum",
    "t_dc_closed",
    "table_ratio",
    "table_realizable_count",
    "verify_factorization",
]
