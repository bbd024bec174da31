"""Local antimagic edge labelings: generators, constructions, verification,
bounds, and an exact brute-force solver."""

__version__ = "0.1.0"

from .constructions import (EdgeLabeling, LabelingReport,
                            build_chi_equal_sequence, extend_join,
                            label_complete, label_complete_multipartite,
                            label_corona, label_necklace,
                            label_union_complete_bipartite,
                            label_union_cycles_even, label_union_cycles_odd,
                            label_union_paths, label_union_stars)
from .errors import (AntimagicError, BudgetExceeded, FormulaBreakdown,
                     InfeasibleParameters, LengthMismatch,
                     NoValidLabelingFound, NotBipartite, TooLarge,
                     WeightCollision)
from .graphs import (Graph, NecklaceSpec, build_complete,
                     build_complete_multipartite,
                     build_union_complete_bipartite, build_union_cycles,
                     build_union_paths, build_union_stars, build_necklace,
                     corona_with_empty, disjoint_union, join_with_empty)
from .magic import (MagicRectangle, MagicRectangleSet, construct_mr,
                    construct_mrs, find_mr_by_backtracking, mr_exists,
                    mrs_exists, verify_mr, verify_mrs)
from .solve import (SolveResult, chi_la_exact, chi_la_upper_heuristic,
                    verify_claim)
from .verify import (BoundsReport, WeightColoring, bounds_report,
                     bipartite_two_color_obstruction, chromatic_number_exact,
                     clique_lower_bound, cycle_parity_lower_bound,
                     induced_weights, is_bijection, is_local_antimagic,
                     labeling_report, pendant_lower_bound,
                     star_subgraph_bound, union_lower_bound)

__all__ = [
    "AntimagicError", "BoundsReport", "BudgetExceeded", "EdgeLabeling",
    "FormulaBreakdown", "Graph", "InfeasibleParameters", "LabelingReport",
    "LengthMismatch", "MagicRectangle", "MagicRectangleSet",
    "NecklaceSpec", "NoValidLabelingFound", "NotBipartite", "SolveResult",
    "TooLarge", "WeightColoring", "WeightCollision",
    "bipartite_two_color_obstruction", "bounds_report",
    "build_chi_equal_sequence", "build_complete",
    "build_complete_multipartite", "build_necklace",
    "build_union_complete_bipartite", "build_union_cycles",
    "build_union_paths", "build_union_stars", "chi_la_exact",
    "chi_la_upper_heuristic", "chromatic_number_exact",
    "clique_lower_bound", "construct_mr", "construct_mrs",
    "corona_with_empty", "cycle_parity_lower_bound", "disjoint_union",
    "extend_join", "find_mr_by_backtracking", "induced_weights",
    "is_bijection", "is_local_antimagic", "join_with_empty",
    "label_complete", "label_complete_multipartite", "label_corona",
    "label_necklace", "label_union_complete_bipartite",
    "label_union_cycles_even", "label_union_cycles_odd",
    "label_union_paths", "label_union_stars", "labeling_report",
    "mr_exists", "mrs_exists", "pendant_lower_bound",
    "star_subgraph_bound", "union_lower_bound", "verify_claim",
    "verify_mr", "verify_mrs",
]
