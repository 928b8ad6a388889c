"""Wiener index, total eccentricity and edge contraction, with exhaustive
checkers for how W - eps behaves when an edge is contracted."""

from .contraction import ContractionResult, contract_chain, contract_edge
from .errors import GraphError
from .graph import (
    Edge,
    Graph,
    from_edge_list,
    is_connected,
    is_path_graph,
    neighbors,
    parse_graph6,
    write_graph6,
)
from .metrics import (
    DistanceMatrix,
    InvariantSummary,
    all_pairs_distances,
    bfs_distances,
    eccentric_vertices,
    eccentricity_vector,
    invariant_summary,
    path_closed_forms,
    total_eccentricity,
    wiener_index,
)

__version__ = "0.1.0"
