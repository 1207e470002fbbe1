"""Distance-unbalancedness of trees.

Exact invariants (uB, Mostar index) from the definitions, the closed-form
decomposition for subdivided stars, exhaustive maximizer searches, and the
continuous relaxation whose optimum gives the 1/2 - 5/(6k) + 1/(3k^2)
leading term.
"""

from .relaxation import (
    BranchFractions,
    ConvergenceError,
    QuadratureError,
    case1_branch_identity,
    case1_pair_identity,
    f2,
    f3,
    f3_at_half,
    f3_critical_point,
    f_closed,
    f_quadrature,
    f_uniform,
    f_uniform_exact,
    lemma1_gap,
    maximize_f,
    theorem1_value,
)
from .search import (
    MaximizerRecord,
    enumerate_free_trees,
    enumerate_signatures,
    max_gap_ratio,
    max_ub_all_trees,
    max_ub_subdivided_stars,
    partition_count,
    partitions_desc,
    search_orders,
    spider_signature,
    tree_certificate,
    verify_dominance,
)
from .stars import (
    StarSignature,
    UbBreakdown,
    build_tree,
    parse_signature,
    signature_fractions,
    ub_closed_form,
    ub_total_fast,
)
from .trees import (
    LabeledTree,
    TreeError,
    all_pairs_distances,
    closer_count,
    format_tree,
    mostar_index,
    parse_tree_text,
    path_tree,
    read_tree,
    star_tree,
    ub_oracle,
    ub_upper_bound,
)

__all__ = [
    "BranchFractions",
    "ConvergenceError",
    "LabeledTree",
    "MaximizerRecord",
    "QuadratureError",
    "StarSignature",
    "TreeError",
    "UbBreakdown",
    "all_pairs_distances",
    "build_tree",
    "case1_branch_identity",
    "case1_pair_identity",
    "closer_count",
    "enumerate_free_trees",
    "enumerate_signatures",
    "f2",
    "f3",
    "f3_at_half",
    "f3_critical_point",
    "f_closed",
    "f_quadrature",
    "f_uniform",
    "f_uniform_exact",
    "format_tree",
    "lemma1_gap",
    "max_gap_ratio",
    "max_ub_all_trees",
    "max_ub_subdivided_stars",
    "maximize_f",
    "mostar_index",
    "parse_signature",
    "parse_tree_text",
    "partition_count",
    "partitions_desc",
    "path_tree",
    "read_tree",
    "search_orders",
    "signature_fractions",
    "spider_signature",
    "star_tree",
    "theorem1_value",
    "tree_certificate",
    "ub_closed_form",
    "ub_oracle",
    "ub_total_fast",
    "ub_upper_bound",
    "verify_dominance",
]

__version__ = "0.1.0"
