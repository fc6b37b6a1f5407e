"""Firefighter problem toolkit: simulation, exact solvers, width measures,
hardness gadgets and the bubble-isolation burn bound."""
from .graph import Graph, build_graph, k_neighborhood
from .layout import (
    LinearLayout,
    PathDecomposition,
    bandwidth_of_layout,
    cutwidth_of_layout,
    exact_bandwidth,
    exact_cutwidth,
    exact_pathwidth,
    validate_path_decomposition,
)
from .propagation import Instance, Strategy, Trace, simulate, simulate_multi, validate_strategy
from .solvers import (
    exhaustive_optimal,
    fpt_decide,
    fpt_pw_delta,
    greedy_baseline,
    tree_optimal,
)

__version__ = "0.1.0"
