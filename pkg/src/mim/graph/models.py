from enum import Enum
from typing import Literal, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict


VertexSet = Tuple[int, ...]
Pair = Tuple[int, int]  # (black, white)


class Color(str, Enum):
    BLACK = "B"
    WHITE = "W"

    @property
    def other(self) -> "Color":
        return Color.WHITE if self is Color.BLACK else Color.BLACK


class BipartiteGraph(BaseModel):
    """Immutable two-colored graph on vertices 0..n-1.

    Build instances with ``mim.graph.new_graph``; the fields are trusted once
    constructed. ``edges`` holds every edge once as a sorted (black, white)
    pair and ``adj`` mirrors it as per-vertex neighbor sets.
    """
    model_config = ConfigDict(frozen=True)

    n: int
    colors: Tuple[Color, ...]
    adj: Tuple[frozenset, ...]
    edges: Tuple[Pair, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def blacks(self) -> VertexSet:
        return tuple(v for v in range(self.n) if self.colors[v] is Color.BLACK)

    @property
    def whites(self) -> VertexSet:
        return tuple(v for v in range(self.n) if self.colors[v] is Color.WHITE)

    def color(self, v: int) -> Color:
        return self.colors[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from((v, {"color": self.colors[v]}) for v in range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def relabel(self, perm) -> "BipartiteGraph":
        """Rename vertex i to perm[i]."""
        from .operations import new_graph

        colors = [Color.BLACK] * self.n
        for v in range(self.n):
            colors[perm[v]] = self.colors[v]
        return new_graph(self.n, colors, [(perm[b], perm[w]) for b, w in self.edges])

    def add_twin(self, v: int) -> "BipartiteGraph":
        """Append vertex n as a same-colored copy of v (same neighborhood)."""
        from .operations import new_graph

        twin = self.n
        extra = [(twin, u) for u in sorted(self.adj[v])]
        return new_graph(self.n + 1, list(self.colors) + [self.colors[v]], list(self.edges) + extra)


class InducedMatching(BaseModel):
    model_config = ConfigDict(frozen=True)

    pairs: Tuple[Pair, ...] = ()

    @property
    def size(self) -> int:
        return len(self.pairs)

    def vertices(self) -> VertexSet:
        return tuple(v for pair in self.pairs for v in pair)


class MatchingViolation(BaseModel):
    """First reason a pair list fails to be an induced matching."""
    kind: Literal["not-an-edge", "repeated-vertex", "connecting-edge"]
    pair: Pair

    def describe(self) -> str:
        u, v = self.pair
        if self.kind == "not-an-edge":
            return f"({u}, {v}) is not an edge of the graph"
        if self.kind == "repeated-vertex":
            return f"pair ({u}, {v}) reuses a matched vertex"
        return f"edge ({u}, {v}) connects two matching edges"
