from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from mim.errors import BadIndex, DuplicateEdge, EmptyGraph, GraphError, MonochromaticEdge

from .models import BipartiteGraph, Color, InducedMatching, MatchingViolation, Pair, VertexSet


def _assemble(colors: Sequence[Color], adj: Sequence[set]) -> BipartiteGraph:
    # callers guarantee symmetric, bichromatic, loop-free adjacency
    n = len(colors)
    edges = sorted(
        (b, w) for b in range(n) if colors[b] is Color.BLACK for w in adj[b]
    )
    return BipartiteGraph.model_construct(
        n=n,
        colors=tuple(colors),
        adj=tuple(frozenset(a) for a in adj),
        edges=tuple(edges),
    )


def new_graph(n: int, colors: Sequence, edge_list: Iterable[Tuple[int, int]]) -> BipartiteGraph:
    """Validate and build a graph; edges may list endpoints in any order."""
    if n < 1:
        raise EmptyGraph()
    if len(colors) != n:
        raise GraphError(f"expected {n} colors, got {len(colors)}")
    palette = tuple(Color(c) for c in colors)
    adj: List[set] = [set() for _ in range(n)]
    for u, v in edge_list:
        for x in (u, v):
            if not 0 <= x < n:
                raise BadIndex(x, n)
        if palette[u] is palette[v]:
            raise MonochromaticEdge(u, v)
        if v in adj[u]:
            raise DuplicateEdge(u, v)
        adj[u].add(v)
        adj[v].add(u)
    return _assemble(palette, adj)


def bicomplement(g: BipartiteGraph) -> BipartiteGraph:
    whites = frozenset(g.whites)
    adj: List[set] = [set() for _ in range(g.n)]
    for b in g.blacks:
        for w in whites - g.adj[b]:
            adj[b].add(w)
            adj[w].add(b)
    return _assemble(g.colors, adj)


def connected_components(g: BipartiteGraph) -> List[VertexSet]:
    """Components ordered by smallest id; a stack search straight over ``g.adj``."""
    seen = [False] * g.n
    parts = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        part = [root]
        while stack:
            for u in g.adj[stack.pop()]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
                    part.append(u)
        parts.append(tuple(sorted(part)))
    return parts


def induced_subgraph(g: BipartiteGraph, s: Sequence[int]) -> Tuple[BipartiteGraph, VertexSet]:
    """Subgraph on ``s`` with local ids 0..len(s)-1 plus the map local -> id in g."""
    local: Dict[int, int] = {}
    for i, v in enumerate(s):
        if not 0 <= v < g.n:
            raise BadIndex(v, g.n)
        if v in local:
            raise GraphError(f"vertex {v} listed twice in the vertex set")
        local[v] = i
    if not local:
        raise EmptyGraph()
    adj = [{local[u] for u in g.adj[v] if u in local} for v in s]
    return _assemble([g.colors[v] for v in s], adj), tuple(s)


def twin_classes(g: BipartiteGraph) -> List[VertexSet]:
    """Same-colored vertices with identical neighborhoods, ordered by smallest id."""
    groups: Dict[Tuple[Color, frozenset], List[int]] = {}
    for v in range(g.n):
        groups.setdefault((g.colors[v], g.adj[v]), []).append(v)
    return [tuple(members) for members in groups.values()]


def find_matching_violation(g: BipartiteGraph, m: InducedMatching) -> Optional[MatchingViolation]:
    partner: Dict[int, int] = {}
    for u, v in m.pairs:
        if not (0 <= u < g.n and 0 <= v < g.n) or v not in g.adj[u]:
            return MatchingViolation(kind="not-an-edge", pair=(u, v))
        if u in partner or v in partner:
            return MatchingViolation(kind="repeated-vertex", pair=(u, v))
        partner[u] = v
        partner[v] = u
    for u, v in m.pairs:
        for end in (u, v):
            for x in sorted(g.adj[end]):
                if x != partner[end] and x in partner:
                    return MatchingViolation(kind="connecting-edge", pair=_oriented(g, end, x))
    return None


def is_induced_matching(g: BipartiteGraph, m: InducedMatching) -> bool:
    return find_matching_violation(g, m) is None


def _oriented(g: BipartiteGraph, u: int, v: int) -> Pair:
    return (u, v) if g.colors[u] is Color.BLACK else (v, u)


def orient_pairs(g: BipartiteGraph, pairs: Iterable[Tuple[int, int]]) -> InducedMatching:
    """Put each pair in (black, white) order where the colors allow it."""
    oriented = []
    for u, v in pairs:
        if 0 <= u < g.n and 0 <= v < g.n and g.colors[u] is Color.WHITE:
            u, v = v, u
        oriented.append((u, v))
    return InducedMatching(pairs=tuple(oriented))
