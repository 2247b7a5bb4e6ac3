from typing import Dict, List, Optional, Sequence, Tuple

from mim.errors import GraphError, MalformedTree
from mim.graph.models import BipartiteGraph, Color, Pair
from mim.graph.operations import new_graph

from .models import DecompNode, NodeKind


def _leaf_colors(tree: DecompNode) -> Dict[int, Color]:
    colors = {}
    stack = [tree]
    while stack:
        node = stack.pop()
        if node.is_leaf:
            colors[node.vertices[0]] = node.color
        else:
            stack.extend(node.children)
    return colors


def _split(vertices, colors) -> Tuple[List[int], List[int]]:
    blacks = [v for v in vertices if colors[v] is Color.BLACK]
    whites = [v for v in vertices if colors[v] is Color.WHITE]
    return blacks, whites


def _join(out: List[Pair], blacks, whites) -> None:
    out.extend((b, w) for b in blacks for w in whites)


def reconstruct(tree: DecompNode, colors: Optional[Sequence[Color]] = None) -> BipartiteGraph:
    """The graph a tree encodes; its leaves must be exactly 0..n-1."""
    n = len(tree.vertices)
    if sorted(tree.vertices) != list(range(n)):
        raise MalformedTree("leaves must carry the distinct ids 0..n-1")
    if colors is None:
        by_leaf = _leaf_colors(tree)
        colors = [by_leaf[v] for v in range(n)]
    elif len(colors) != n:
        raise MalformedTree(f"expected {n} colors, got {len(colors)}")

    edges: List[Pair] = []
    stack = [tree]
    while stack:
        node = stack.pop()
        stack.extend(node.children)
        kind = node.kind
        if kind in (NodeKind.S, NodeKind.KS):
            sides = [_split(child.vertices, colors) for child in node.children]
            for i, (blacks_i, whites_i) in enumerate(sides):
                for blacks_j, whites_j in sides[i + 1:]:
                    _join(edges, blacks_i, whites_j)
                    if kind is NodeKind.S:
                        _join(edges, blacks_j, whites_i)
        elif kind is NodeKind.N:
            shape = node.shape
            k = shape.k
            for i in range(k):
                for j in range(i + 1, k):
                    if shape.colors[i] is shape.colors[j]:
                        continue
                    consecutive = j == i + 1 or (shape.form.is_cycle and i == 0 and j == k - 1)
                    if consecutive == shape.form.is_bip:
                        continue
                    first, second = shape.classes[i], shape.classes[j]
                    if shape.colors[i] is Color.WHITE:
                        first, second = second, first
                    _join(edges, first, second)
    try:
        return new_graph(n, colors, edges)
    except GraphError as exc:
        raise MalformedTree(f"tree does not encode a bipartite graph: {exc.detail}") from None
