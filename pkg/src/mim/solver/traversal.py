import logging
from typing import List, Optional

from mim.decomposition.builder import decompose
from mim.decomposition.models import DecompNode, NodeKind
from mim.errors import InternalInvariant, MalformedTree
from mim.graph.models import BipartiteGraph, InducedMatching
from mim.graph.operations import find_matching_violation

from .models import NodeAnnotation, SolveStats
from .rules import annotate_leaf, annotate_monochromatic, combine_KS, combine_N, combine_P, combine_S

logger = logging.getLogger(__name__)


def _combine(node: DecompNode, children: List[NodeAnnotation], stats: SolveStats) -> NodeAnnotation:
    kind = node.kind
    if kind is NodeKind.P:
        return combine_P(children, stats)
    if kind is NodeKind.S:
        return combine_S(children, stats)
    if kind is NodeKind.KS:
        flags = [child.is_leaf for child in node.children]
        return combine_KS(list(zip(children, flags)), stats)
    if kind is NodeKind.N:
        return combine_N(node.shape, stats)
    if kind is NodeKind.PPRIME:
        return annotate_monochromatic(children)
    raise MalformedTree(f"unexpected internal node kind {kind!r}")


def solve_annotation(tree: DecompNode, stats: Optional[SolveStats] = None) -> NodeAnnotation:
    """Post-order fold of the tree; returns the root annotation."""
    stats = stats if stats is not None else SolveStats()
    values: List[NodeAnnotation] = []
    stack = [(tree, False)]
    while stack:
        node, expanded = stack.pop()
        if node.is_leaf:
            stats.nodes += 1
            values.append(annotate_leaf(node))
        elif not expanded:
            stack.append((node, True))
            stack.extend((child, False) for child in reversed(node.children))
        else:
            k = len(node.children)
            children = values[-k:]
            del values[-k:]
            stats.nodes += 1
            stats.charge(k)
            values.append(_combine(node, children, stats))
    (root,) = values
    return root


def solve(tree: DecompNode, g: Optional[BipartiteGraph] = None, stats: Optional[SolveStats] = None) -> InducedMatching:
    """Maximum induced matching of the graph encoded by ``tree``."""
    if g is not None and len(tree.vertices) != g.n:
        raise MalformedTree(f"tree covers {len(tree.vertices)} vertices, graph has {g.n}")
    stats = stats if stats is not None else SolveStats()
    matching = solve_annotation(tree, stats).to_matching()
    logger.debug("solved %d nodes with %d work units, matching size %d", stats.nodes, stats.work, matching.size)
    return matching


def max_induced_matching(g: BipartiteGraph) -> InducedMatching:
    matching = solve(decompose(g), g)
    violation = find_matching_violation(g, matching)
    if violation is not None:
        raise InternalInvariant(f"solver produced an invalid matching: {violation.describe()}")
    return matching
