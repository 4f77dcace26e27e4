"""Exact domination, total domination and outer-connected domination on
graph products, with constructive witnesses and a verification harness."""

from .graph_core import Graph, GraphError, VertexSet, build_graph, emit_graph6, parse_graph6
from .products import cartesian, complete, corona, cycle, direct, direct_power_complete, lexicographic, path, star
from .solvers import DominationCertificate, solve_bnb, solve_exact

__all__ = [
    "Graph",
    "GraphError",
    "VertexSet",
    "build_graph",
    "emit_graph6",
    "parse_graph6",
    "cartesian",
    "complete",
    "corona",
    "cycle",
    "direct",
    "direct_power_complete",
    "lexicographic",
    "path",
    "star",
    "DominationCertificate",
    "solve_bnb",
    "solve_exact",
]
