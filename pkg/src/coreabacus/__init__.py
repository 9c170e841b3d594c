"""Abacus models of integer partitions and simultaneous core enumeration."""

__version__ = "0.1.0"

from .partitions import (  # noqa: F401
    EMPTY,
    HookLength,
    Partition,
    conjugate,
    first_column_hooks,
    has_distinct_parts,
    hook_length_multiset,
    hook_lengths,
    is_self_conjugate,
    is_two_core,
    staircase,
)
from .abacus import (  # noqa: F401
    Abacus,
    AxisTheta,
    RunnerMismatchError,
    beadset,
    beadset_to_partition,
    from_abacus,
    is_core_abacus,
    is_simultaneous_core,
    is_sub_abacus,
    is_t_core,
    normalize,
    partition_to_minimal_beadset,
    render_abacus,
    self_conjugate_axis_check,
    to_abacus,
)
from .constructions import (  # noqa: F401
    Pyramid,
    build_a,
    build_b,
    build_c,
    build_e_minus,
    build_e_plus,
    build_l,
    build_named,
    intersect,
    is_pyramid,
    project_block,
    wedge,
    wedge_all,
)
from .enumeration import (  # noqa: F401
    AmbiguousLongestError,
    CoreFamily,
    GapPoset,
    GuardRailError,
    count_st_cores,
    enumerate_multi_cores,
    enumerate_st_cores,
    filter_distinct,
    filter_self_conjugate,
    gap_poset,
    longest_member,
    maximal_st_core,
    oracle_enumerate,
    st_core_weight_profile,
)
from .verification import (  # noqa: F401
    CLAIM_IDS,
    Cell,
    VerificationReport,
    corollary3_check,
    fib_count,
    longest_weight_formula,
    max_weight_formula,
    middle_identity_check,
    self_conjugate_counts,
    staircase_core_count,
    straub_minus,
    straub_plus,
    verify_claim,
)
