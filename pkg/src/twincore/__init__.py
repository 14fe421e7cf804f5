"""Exact enumeration toolkit for simultaneous core partitions with distinct parts.

Partitions and beta-sets, gap posets of numerical semigroups and their
(nice) order ideals, the recursive bijections onto Dyck and free Dyck
paths, extremal constructions, and a census harness that replays every
closed-form count against exhaustive enumeration.
"""

from .bijections import (
    MarkedIdeal,
    enumerate_marked_ideals,
    marked_ideal_count,
    phi,
    phi_inverse,
    psi,
    psi_inverse,
)
from .census import (
    CensusReport,
    CensusRow,
    verify_counts,
    verify_identities,
    verify_largest,
    verify_regressions,
)
from .errors import GuardError, Int64OverflowError
from .extremal import (
    ExtremalSpec,
    beta_block,
    beta_ideal,
    gamma_ideal,
    lambda_size,
    largest_size,
    largest_size_from_s,
    max_partition,
    mu_size,
)
from .numbers import binomial, catalan, fibonacci, rational_catalan
from .partitions import (
    BetaSet,
    Partition,
    beta_set,
    brute_force_distinct_cores,
    has_distinct_parts,
    has_distinct_parts_via_beta,
    hook_length_grid,
    is_simultaneous_core,
    is_t_core,
    is_t_core_via_hooks,
    partition_of_beta,
    size_from_beta,
)
from .paths import (
    LatticePath,
    enumerate_dyck,
    enumerate_free_dyck,
    first_return_split,
    is_dyck,
    is_free_dyck,
    path,
    reverse_path,
)
from .posets import (
    GapPoset,
    IdealClassification,
    OrderIdeal,
    TruncatedPoset,
    classify_ideal,
    enumerate_ideals,
    enumerate_nice_ideals,
    gap_poset,
    is_nice,
    is_order_ideal,
    iter_ideal_members,
    poset_to_dot,
    poset_to_json_dict,
    q_decomposition,
    t_decomposition,
    truncated_poset,
)

__version__ = "0.1.0"
