"""Searches over arcs given by NON-adjacency.

Both the bicomplement and the K+S implication digraph have an arc for every
missing black-white edge. ``UnvisitedSet`` lets a search enumerate the still
unvisited non-neighbors of a vertex while paying only for neighbors it skips
and vertices it takes, so a full search costs O(n + m) instead of O(|B|·|W|).
"""
from typing import List, Optional, Sequence

from mim.graph.models import BipartiteGraph, Color, VertexSet


class UnvisitedSet:
    """Ordered vertices supporting deletion and 'first alive at or after i'."""

    def __init__(self, items: Sequence[int]):
        self.items = list(items)
        self._next = list(range(len(self.items) + 1))
        self._position = {v: i for i, v in enumerate(self.items)}

    def __len__(self) -> int:
        return len(self.items)

    def find(self, i: int) -> int:
        nxt = self._next
        root = i
        while nxt[root] != root:
            root = nxt[root]
        while nxt[i] != root:
            nxt[i], i = root, nxt[i]
        return root

    def discard(self, v: int) -> None:
        i = self._position[v]
        self._next[i] = i + 1

    def first_outside(self, start: int, blocked: frozenset) -> int:
        """Position of the first alive item at or after ``start`` not in ``blocked``."""
        i = self.find(start)
        end = len(self.items)
        while i < end and self.items[i] in blocked:
            i = self.find(i + 1)
        return i

    def get(self, i: int) -> Optional[int]:
        return self.items[i] if i < len(self.items) else None


def co_components(g: BipartiteGraph) -> List[VertexSet]:
    """Connected components of bicomplement(g), ordered by smallest id."""
    pools = {Color.BLACK: set(g.blacks), Color.WHITE: set(g.whites)}
    parts = []
    for root in range(g.n):
        own = pools[g.colors[root]]
        if root not in own:
            continue
        own.discard(root)
        queue = [root]
        part = [root]
        while queue:
            v = queue.pop()
            other = pools[g.colors[v].other]
            hits = [u for u in other if u not in g.adj[v]]
            other.difference_update(hits)
            queue.extend(hits)
            part.extend(hits)
        parts.append(tuple(sorted(part)))
    return parts
