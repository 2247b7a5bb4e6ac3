"""K+S decomposition.

A prefix V1 of an associated partition must be closed under the implication
digraph D: a black vertex forces every white NON-neighbor into V1, a white
vertex forces every black neighbor into V1. The K+S components are the strongly
connected components of D, listed sinks first; incomparable components are
taken in order of their smallest vertex id.
"""
import heapq
import logging
from collections import defaultdict
from typing import Dict, List, Optional, Tuple

from mim.errors import InternalInvariant, TooSmall
from mim.graph.models import BipartiteGraph, Color, VertexSet

from .complement import UnvisitedSet

logger = logging.getLogger(__name__)


def _dfs_forest(g: BipartiteGraph, roots, complement_color: Color):
    """Iterative DFS over D (complement_color=BLACK) or its reverse (WHITE).

    Vertices of ``complement_color`` step to unvisited NON-neighbors, the other
    color steps to unvisited neighbors. Returns (trees, finish order).
    """
    colors, adj = g.colors, g.adj
    pools = {Color.BLACK: UnvisitedSet(g.blacks), Color.WHITE: UnvisitedSet(g.whites)}
    seen = [False] * g.n
    trees: List[List[int]] = []
    finish: List[int] = []

    def frame(u: int) -> list:
        seen[u] = True
        pools[colors[u]].discard(u)
        return [u, 0 if colors[u] is complement_color else iter(adj[u])]

    for root in roots:
        if seen[root]:
            continue
        tree = [root]
        stack = [frame(root)]
        while stack:
            top = stack[-1]
            v = top[0]
            if colors[v] is complement_color:
                pool = pools[colors[v].other]
                top[1] = pool.first_outside(top[1], adj[v])
                u = pool.get(top[1])
            else:
                u = next((x for x in top[1] if not seen[x]), None)
            if u is None:
                stack.pop()
                finish.append(v)
            else:
                tree.append(u)
                stack.append(frame(u))
        trees.append(tree)
    return trees, finish


def implication_components(g: BipartiteGraph) -> List[List[int]]:
    """Strongly connected components of D (Kosaraju)."""
    _trees, finish = _dfs_forest(g, range(g.n), Color.BLACK)
    components, _finish = _dfs_forest(g, reversed(finish), Color.WHITE)
    return components


def _sinks_first(g: BipartiteGraph, components: List[List[int]]) -> List[VertexSet]:
    """Order the condensation of D sinks first, ties by smallest vertex id.

    Out-arcs of a component C towards unemitted components are counted as
      |B∩C|·(unemitted whites outside C) − (unemitted white neighbors of B∩C outside C)
      + (unemitted black neighbors of W∩C outside C)
    so only the sparse terms need per-edge updates. The dense part vanishes
    exactly when |B∩C|·whites_left equals ``dense_level``; components wait in a
    bucket under that whites_left value until the count drops to it.
    """
    colors, adj = g.colors, g.adj
    k = len(components)
    owner = [0] * g.n
    for c, comp in enumerate(components):
        for v in comp:
            owner[v] = c
    smallest = [min(comp) for comp in components]
    n_black = [0] * k
    n_white = [0] * k
    black_out = [0] * k  # edges from B∩C leaving C
    white_out = [0] * k  # edges from W∩C leaving C
    for c, comp in enumerate(components):
        for v in comp:
            leaving = sum(1 for u in adj[v] if owner[u] != c)
            if colors[v] is Color.BLACK:
                n_black[c] += 1
                black_out[c] += leaving
            else:
                n_white[c] += 1
                white_out[c] += leaving

    whites_left = sum(n_white)
    emitted = [False] * k
    queued = [False] * k
    ready: List[Tuple[int, int]] = []
    buckets: Dict[int, List[int]] = defaultdict(list)

    def dense_level(c: int) -> int:
        return n_black[c] * n_white[c] + black_out[c]

    def park(c: int) -> None:
        # stale entries are harmless, offer() rechecks
        level, rest = divmod(dense_level(c), n_black[c])
        if not rest and level < whites_left:
            buckets[level].append(c)

    def offer(c: int) -> None:
        if queued[c] or white_out[c]:
            return
        if n_black[c] and n_black[c] * whites_left != dense_level(c):
            return
        queued[c] = True
        heapq.heappush(ready, (smallest[c], c))

    for c in range(k):
        if n_black[c]:
            park(c)
        offer(c)

    order = []
    while ready:
        _, c = heapq.heappop(ready)
        emitted[c] = True
        order.append(c)
        touched = set()
        for v in components[c]:
            for u in adj[v]:
                d = owner[u]
                if emitted[d]:
                    continue
                if colors[u] is Color.BLACK:
                    black_out[d] -= 1
                else:
                    white_out[d] -= 1
                touched.add(d)
        if n_white[c]:
            whites_left -= n_white[c]
            for d in buckets.pop(whites_left, ()):
                offer(d)
        for d in touched:
            if n_black[d]:
                park(d)
            offer(d)
    if len(order) != k:
        raise InternalInvariant("implication digraph condensation has no sink")
    return [tuple(sorted(components[c])) for c in order]


def ks_split(g: BipartiteGraph) -> Optional[List[VertexSet]]:
    """K+S components V1..Vk (k >= 2) in prefix order, or None if g is not K+S."""
    if g.n < 2:
        raise TooSmall(g.n)
    components = implication_components(g)
    if len(components) == 1:
        return None
    parts = _sinks_first(g, components)
    logger.debug("K+S split of %d vertices into %d parts", g.n, len(parts))
    return parts


def is_associated_partition(g: BipartiteGraph, first, second) -> bool:
    """Blacks of ``first`` see every white of ``second``; no white of ``first`` sees a black of ``second``."""
    second = set(second)
    whites_after = sum(1 for v in second if g.colors[v] is Color.WHITE)
    for v in first:
        inside = sum(1 for u in g.adj[v] if u in second)
        if g.colors[v] is Color.BLACK and inside != whites_after:
            return False
        if g.colors[v] is Color.WHITE and inside:
            return False
    return True
