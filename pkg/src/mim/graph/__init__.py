from .models import BipartiteGraph, Color, InducedMatching, MatchingViolation, Pair, VertexSet
from .operations import (
    bicomplement,
    connected_components,
    find_matching_violation,
    induced_subgraph,
    is_induced_matching,
    new_graph,
    orient_pairs,
    twin_classes,
)
from .io import format_graph, format_matching, parse_graph, parse_matching, read_graph, read_matching

__all__ = [
    "BipartiteGraph",
    "Color",
    "InducedMatching",
    "MatchingViolation",
    "Pair",
    "VertexSet",
    "bicomplement",
    "connected_components",
    "find_matching_violation",
    "induced_subgraph",
    "is_induced_matching",
    "new_graph",
    "orient_pairs",
    "twin_classes",
    "format_graph",
    "format_matching",
    "parse_graph",
    "parse_matching",
    "read_graph",
    "read_matching",
]
