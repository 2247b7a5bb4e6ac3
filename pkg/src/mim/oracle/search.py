"""Exhaustive ground truth for small graphs."""
import logging
from itertools import combinations
from typing import List, Optional, Tuple

from mim import config
from mim.decomposition.ks_split import is_associated_partition
from mim.errors import TooLarge
from mim.graph.models import BipartiteGraph, InducedMatching, VertexSet

logger = logging.getLogger(__name__)


def conflict_masks(g: BipartiteGraph) -> List[int]:
    """Bit j of entry i is set when edges i and j cannot both be in an induced matching."""
    incident = [0] * g.n
    for i, (b, w) in enumerate(g.edges):
        incident[b] |= 1 << i
        incident[w] |= 1 << i
    masks = []
    for b, w in g.edges:
        # adj[b] holds w and adj[w] holds b, so shared endpoints are covered
        mask = 0
        for x in g.adj[b] | g.adj[w]:
            mask |= incident[x]
        masks.append(mask)
    return masks


def brute_force_mim(g: BipartiteGraph) -> InducedMatching:
    """Branch and bound over edges in id order, including an edge before excluding it."""
    if g.m > config.ORACLE_MAX_EDGES:
        raise TooLarge("edge count", g.m, config.ORACLE_MAX_EDGES)
    conflicts = conflict_masks(g)
    best: List[int] = []
    chosen: List[int] = []
    calls = 0

    def search(allowed: int) -> None:
        nonlocal best, calls
        calls += 1
        if len(chosen) + allowed.bit_count() <= len(best):
            return
        if not allowed:
            best = list(chosen)
            return
        i = (allowed & -allowed).bit_length() - 1
        chosen.append(i)
        search(allowed & ~conflicts[i])
        chosen.pop()
        search(allowed & ~(1 << i))

    search((1 << g.m) - 1)
    logger.debug("oracle searched %d branches for %d edges", calls, g.m)
    return InducedMatching(pairs=tuple(g.edges[i] for i in best))


def brute_force_ks_split(g: BipartiteGraph) -> Optional[Tuple[VertexSet, VertexSet]]:
    """First associated partition (V1, V2) by enumeration of V1, or None."""
    if g.n > config.KS_BRUTE_MAX_VERTICES:
        raise TooLarge("vertex count", g.n, config.KS_BRUTE_MAX_VERTICES)
    vertices = range(g.n)
    for size in range(1, g.n):
        for first in combinations(vertices, size):
            second = tuple(v for v in vertices if v not in first)
            if is_associated_partition(g, first, second):
                return first, second
    return None
