"""Balanced square colorings, groupings, and the 3-Coloring to LIST-HOM reduction."""
from .coloring import (
    BalancedColoring,
    ColorExhausted,
    ColoringParams,
    PairEdgeCounts,
    ParameterError,
    balanced_color,
    equitable_precolor,
    forbidden_colors,
    greedy_independent_set,
    verify_balanced,
)
from .graph import Graph, Partition, VerificationReport, max_degree, quotient, square
from .grouping import (
    DegreeBoundViolated,
    Grouping,
    GroupingError,
    build_grouping,
    constraint_graph,
    from_partition,
    random_grouping,
    singleton_grouping,
    verify_grouping,
)
from .params import admissible_L_range, admissible_r_max, constants, theorem_params
from .reduction import (
    AmbiguousPort,
    Code,
    InconsistentImage,
    ListHomInstance,
    PortMap,
    compile_instance,
    encode_coloring,
    lift_coloring,
    port_map,
    project_hom,
)
from .solvers import BudgetExceeded, check_list_hom, solve_3coloring, solve_hom, solve_list_hom

__version__ = "0.1.0"
