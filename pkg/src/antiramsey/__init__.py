"""Anti-Ramsey numbers of q-edge trees in complete multipartite graphs."""

from .ar import AntiRamseyResult, anti_ramsey, ar_large_gap_fastpath, witness_coloring
from .errors import AntiRamseyError, DomainError, InputError, ResourceError
from .extremal import (
    ExtremalResult,
    VertexPartition,
    best_assignment,
    candidate_sequences,
    ellq,
    exceptional_lookup,
)
from .greedy import GreedyTrace, algorithm_a, closed_form_boundary, is_min_selection, min_boundary_edges
from .multipartite import (
    MultipartiteGraph,
    VertexSelection,
    boundary_edge_count,
    build_graph,
    edge_count,
    enumerate_graphs,
    induced_edge_count,
)
from .oracle import Coloring, RainbowTree, find_rainbow_tree, oracle_ar, oracle_ellq, oracle_min_boundary

__version__ = "0.1.0"
