"""Exact shadows of uniform set families.

Colex initial segments of full and window-restricted layers, binomial-block
representations of segment lengths, closed-form shadow sizes, a catalog of
named extremal families, and brute-force verification of shadow lower bounds
at desk scale.
"""

from .colex import (
    SegmentSpec,
    ambient_size,
    colex_cmp,
    colex_rank,
    colex_unrank,
    initial_segment,
    profile_from_last,
    segment_shadow_size,
)
from .combinatorics import (
    CascadeRep,
    HMCascadeRep,
    NoRepresentationError,
    ParameterDomainError,
    binom,
    cascade_generalized,
    cascade_hm,
    cascade_standard,
    em_size,
    em_size_general,
    hm_size,
    segment_profile,
    shadow_size_em_segment,
    shadow_size_hm_segment,
)
from .families import (
    FAMILY_NAMES,
    FamilySpec,
    Threshold,
    build,
    format_family_spec,
    parse_family_spec,
    size,
    threshold,
)
from .setfamily import (
    MAX_UNIVERSE,
    Family,
    KSet,
    cover_number,
    degree,
    delete_vertex,
    elements,
    ell_shadow,
    format_family,
    full_layer,
    has_matching_of_size,
    is_shifted,
    is_t_intersecting,
    kset,
    link,
    matching_number,
    max_degree,
    parse_family,
    shadow,
    shift_closure,
    shift_ij,
)
from .verify import (
    BudgetExceededError,
    Constraint,
    VerificationReport,
    cascade_roundtrip_grid,
    check_theorem_1_3,
    check_theorem_1_6,
    check_theorem_1_11,
    em_segment_shadow_grid,
    fact_17_scan,
    hm_shadow_formula_scan,
    kk_scan,
    min_shadow,
    post_t111_scan,
    shifting_suite,
    solve_real_size,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_UNIVERSE",
    "FAMILY_NAMES",
    "BudgetExceededError",
    "CascadeRep",
    "Constraint",
    "Family",
    "FamilySpec",
    "HMCascadeRep",
    "KSet",
    "NoRepresentationError",
    "ParameterDomainError",
    "SegmentSpec",
    "Threshold",
    "VerificationReport",
    "ambient_size",
    "binom",
    "build",
    "cascade_generalized",
    "cascade_hm",
    "cascade_roundtrip_grid",
    "cascade_standard",
    "check_theorem_1_3",
    "check_theorem_1_6",
    "check_theorem_1_11",
    "colex_cmp",
    "colex_rank",
    "colex_unrank",
    "cover_number",
    "degree",
    "delete_vertex",
    "elements",
    "ell_shadow",
    "em_segment_shadow_grid",
    "em_size",
    "em_size_general",
    "fact_17_scan",
    "format_family",
    "format_family_spec",
    "full_layer",
    "has_matching_of_size",
    "hm_shadow_formula_scan",
    "hm_size",
    "initial_segment",
    "is_shifted",
    "is_t_intersecting",
    "kk_scan",
    "kset",
    "link",
    "matching_number",
    "max_degree",
    "min_shadow",
    "parse_family",
    "parse_family_spec",
    "post_t111_scan",
    "profile_from_last",
    "segment_profile",
    "segment_shadow_size",
    "shadow",
    "shadow_size_em_segment",
    "shadow_size_hm_segment",
    "shift_closure",
    "shift_ij",
    "shifting_suite",
    "size",
    "solve_real_size",
    "threshold",
]
