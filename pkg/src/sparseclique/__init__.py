"""Exact maximum-clique solving for large sparse graphs.

The solver prunes peripheral nodes, decomposes the graph into at most two
small core-guided search subgraphs, and runs a bound-pruned Bron-Kerbosch
search on each. Ships with a CLI, an HTTP service, and a benchmark harness.
"""

from .cores import CoreDecomposition, clique_upper_bound, compute_cores, nodes_with_core_at_least
from .generate import erdos_renyi, preferential_attachment
from .graph import (
    Graph,
    build_graph,
    closed_neighborhood_subgraph,
    degree,
    induced_subgraph,
)
from .ingest import EdgeListSource, ParseError, load_graph
from .search import (
    BoundMode,
    Clique,
    brute_force_max_clique,
    reference_bk_max_clique,
    search_max_clique,
    verify_clique,
)
from .solver import (
    CubisStats,
    InvariantError,
    PruneStats,
    RunReport,
    SolveConfig,
    assess_node,
    construct_first_cubis,
    construct_second_cubis,
    pre_prune,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "BoundMode",
    "Clique",
    "CoreDecomposition",
    "CubisStats",
    "EdgeListSource",
    "Graph",
    "InvariantError",
    "ParseError",
    "PruneStats",
    "RunReport",
    "SolveConfig",
    "assess_node",
    "brute_force_max_clique",
    "build_graph",
    "clique_upper_bound",
    "closed_neighborhood_subgraph",
    "compute_cores",
    "construct_first_cubis",
    "construct_second_cubis",
    "degree",
    "erdos_renyi",
    "induced_subgraph",
    "load_graph",
    "nodes_with_core_at_least",
    "pre_prune",
    "preferential_attachment",
    "reference_bk_max_clique",
    "search_max_clique",
    "solve",
    "verify_clique",
]
