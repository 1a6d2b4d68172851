"""Exact solvers and instance generators for colored token swapping."""

from .complete import (
    CycleCover,
    CycleCoverILP,
    DestinationGraph,
    build_destination_graph,
    enumerate_type_sequences,
    potential,
    resolve_cycle,
    solve_complete,
    solve_optimal_cycle_cover,
)
from .core import (
    Graph,
    InfeasibleInstanceError,
    Instance,
    InvalidInstanceError,
    InvalidSwapError,
    Solution,
    TokenPlacement,
    UnsupportedSolverError,
    apply_swap,
    check_equivalence,
    connected_components,
    swap_count_upper_bound,
    verify_sequence,
)
from .degree2 import (
    classify_components,
    enumerate_color_matchings,
    solve_degree2,
    sort_cycle_permutation,
    sort_path_permutation,
)
from .dispatch import SolveReport, dispatch
from .io import instance_from_dict, instance_to_dict, load_instance, save_instance
from .oracle import StateCapExceeded, estimate_state_count, exact_opt
from .reduction import (
    ThreeDMInstance,
    extend_colors,
    find_perfect_matching,
    lower_bound_3m,
    reduce_3dm,
    star_witness,
    worst_case_path,
)
from .tree import compute_diff_values, construct_tree_sequence, solve_tree_two_color
from .two_color import (
    all_pairs_shortest_paths,
    build_bipartite,
    color_shift_along_path,
    min_weight_perfect_matching,
    solve_two_color,
)

__version__ = "0.1.0"
