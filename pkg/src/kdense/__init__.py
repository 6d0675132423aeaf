"""k-dense communities, the k*-density index and extremal k*-dense graphs."""

from __future__ import annotations

from .density import density_index, dense_hierarchy, is_k_dense, k_dense_communities, k_dense_subgraph
from .formats import from_graph6, parse_graph, to_graph6
from .graph import Graph, GraphError, from_edge_list

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphError",
    "dense_hierarchy",
    "density_index",
    "from_edge_list",
    "from_graph6",
    "is_k_dense",
    "k_dense_communities",
    "k_dense_subgraph",
    "parse_graph",
    "to_graph6",
]
