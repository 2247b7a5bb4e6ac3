"""Star123 pattern and its induced-subgraph detector.

Star123 is the tree with center c and pendant paths of lengths 1, 2 and 3:
c-a1, c-b1-b2, c-c1-c2-c3.
"""
from typing import Optional

from networkx.algorithms.isomorphism import GraphMatcher

from mim import config
from mim.errors import TooLarge
from mim.graph.models import BipartiteGraph, VertexSet
from mim.graph.operations import new_graph

# c, a1, b1, b2, c1, c2, c3
STAR123_COLORS = "BWWBWBW"
STAR123_EDGES = ((0, 1), (0, 2), (3, 2), (0, 4), (5, 4), (5, 6))
STAR123_DEGREES = (3, 2, 2, 2, 1, 1, 1)


def star123() -> BipartiteGraph:
    return new_graph(7, STAR123_COLORS, STAR123_EDGES)


def degrees_admit_star123(g: BipartiteGraph) -> bool:
    """Largest degrees of g dominate the pattern degrees one by one."""
    degrees = sorted((g.degree(v) for v in range(g.n)), reverse=True)
    if len(degrees) < len(STAR123_DEGREES):
        return False
    return all(have >= need for have, need in zip(degrees, STAR123_DEGREES))


def contains_star123(g: BipartiteGraph) -> Optional[VertexSet]:
    """Sorted vertex set of an induced Star123, or None."""
    if g.n > config.STAR_MAX_VERTICES:
        raise TooLarge("vertex count", g.n, config.STAR_MAX_VERTICES)
    if not degrees_admit_star123(g):
        return None
    # GraphMatcher subgraph isomorphisms are node-induced
    matcher = GraphMatcher(g.to_networkx(), star123().to_networkx())
    for mapping in matcher.subgraph_isomorphisms_iter():
        return tuple(sorted(mapping))
    return None
