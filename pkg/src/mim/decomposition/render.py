from collections import Counter
from typing import Dict, List

from pydantic import BaseModel

from .models import DecompNode, NodeKind


class TreeStats(BaseModel):
    nodes: int
    depth: int
    by_kind: Dict[str, int]


def label(node: DecompNode) -> str:
    kind = node.kind
    if kind is NodeKind.LEAF:
        return f"leaf {node.vertices[0]} {node.color.value}"
    if kind is NodeKind.KS:
        return f"KS(k={len(node.children)})"
    if kind is NodeKind.N:
        return f"N({node.shape.form.value},k={node.shape.k})"
    if kind is NodeKind.PPRIME:
        return f"P'(|V|={len(node.vertices)})"
    return f"{kind.value}({len(node.children)})"


def _preorder(tree: DecompNode):
    stack = [(tree, 0)]
    while stack:
        node, depth = stack.pop()
        yield node, depth
        stack.extend((child, depth + 1) for child in reversed(node.children))


def render_tree(tree: DecompNode) -> str:
    return "".join(f"{'  ' * depth}{label(node)}\n" for node, depth in _preorder(tree))


def render_dot(tree: DecompNode) -> str:
    lines: List[str] = ["digraph decomposition {"]
    ids: Dict[int, str] = {}
    edges = []
    for node, _depth in _preorder(tree):
        name = ids[id(node)] = f"n{len(ids)}"
        lines.append(f'  {name} [label="{label(node)}"];')
        for child in node.children:
            edges.append((name, child))
    for name, child in edges:
        lines.append(f"  {name} -> {ids[id(child)]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_stats(tree: DecompNode) -> TreeStats:
    by_kind = Counter()
    depth = 0
    for node, level in _preorder(tree):
        by_kind[node.kind.value] += 1
        depth = max(depth, level)
    return TreeStats(nodes=sum(by_kind.values()), depth=depth, by_kind=dict(by_kind))
