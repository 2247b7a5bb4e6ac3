from mim.graph.models import InducedMatching

from .models import MatchingRope, NodeAnnotation, SolveStats
from .rules import combine_KS, combine_N, combine_P, combine_S
from .traversal import max_induced_matching, solve, solve_annotation
from .routing import router

__all__ = [
    "InducedMatching",
    "MatchingRope",
    "NodeAnnotation",
    "SolveStats",
    "combine_KS",
    "combine_N",
    "combine_P",
    "combine_S",
    "max_induced_matching",
    "solve",
    "solve_annotation",
    "router",
]
