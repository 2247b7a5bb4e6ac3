"""Per-node combination rules of the post-order traversal."""
from typing import List, Optional, Sequence, Tuple

from mim.decomposition.models import DecompNode, PrimeShape
from mim.errors import MissingAuxPair
from mim.graph.models import Color, Pair

from .models import EMPTY, MatchingRope, NodeAnnotation, SolveStats


def _first(values) -> Optional[int]:
    return next((v for v in values if v is not None), None)


def _best(children: Sequence[Tuple[int, NodeAnnotation]]) -> NodeAnnotation:
    # max() keeps the first of equal sizes, i.e. the lowest child index
    return max(children, key=lambda item: item[1].size)[1]


def _charge(stats: Optional[SolveStats], units: int) -> None:
    if stats is not None:
        stats.charge(units)


def annotate_leaf(node: DecompNode) -> NodeAnnotation:
    v = node.vertices[0]
    if node.color is Color.BLACK:
        return NodeAnnotation(EMPTY, black=v)
    return NodeAnnotation(EMPTY, white=v)


def annotate_monochromatic(children: Sequence[NodeAnnotation]) -> NodeAnnotation:
    """P' node: a stable set, no edge and no bichromatic pair."""
    return NodeAnnotation(
        EMPTY,
        black=_first(c.black for c in children),
        white=_first(c.white for c in children),
    )


def _cross_pair(
    children: Sequence[NodeAnnotation], early: str, late: str, stats: Optional[SolveStats]
) -> Optional[Tuple[int, int]]:
    """A vertex of color ``early`` in some child followed by one of color ``late`` in a later child."""
    seen = None
    for steps, child in enumerate(children, 1):
        found = getattr(child, late)
        if seen is not None and found is not None:
            _charge(stats, steps)
            return seen, found
        if seen is None:
            seen = getattr(child, early)
    _charge(stats, len(children))
    return None


def combine_P(children: Sequence[NodeAnnotation], stats: Optional[SolveStats] = None) -> NodeAnnotation:
    matching = MatchingRope.concat([c.matching for c in children])
    black = _first(c.black for c in children)
    white = _first(c.white for c in children)
    aux = None
    if matching.size <= 1:
        # vertices of distinct components are never adjacent
        aux = _first(c.aux_pair for c in children)
        if aux is None:
            blacks = [(i, c.black) for i, c in enumerate(children) if c.black is not None][:2]
            whites = [(j, c.white) for j, c in enumerate(children) if c.white is not None][:2]
            aux = next(((b, w) for i, b in blacks for j, w in whites if i != j), None)
        _charge(stats, len(children))
    return NodeAnnotation(matching, aux, black, white)


def combine_S(children: Sequence[NodeAnnotation], stats: Optional[SolveStats] = None) -> NodeAnnotation:
    black = _first(c.black for c in children)
    white = _first(c.white for c in children)
    best = _best(list(enumerate(children)))
    if best.size >= 2:
        return NodeAnnotation(best.matching, None, black, white)

    carriers = [c.aux_pair for c in children if c.aux_pair is not None][:2]
    _charge(stats, len(children))
    if len(carriers) < 2:
        raise MissingAuxPair(
            "series node has fewer than two children with a non-adjacent black/white pair"
        )
    (v1, v2), (v3, v4) = carriers
    # every black/white pair across series children is an edge
    return NodeAnnotation(MatchingRope.of_pairs([(v1, v4), (v3, v2)]), None, black, white)


def combine_KS(
    children: Sequence[Tuple[NodeAnnotation, bool]], stats: Optional[SolveStats] = None
) -> NodeAnnotation:
    """``children`` are (annotation, is_vertex) in K+S order V1..Vk.

    Black of V_i and white of V_j are adjacent exactly when i < j.
    """
    annotations = [ann for ann, _is_vertex in children]
    non_vertex = [(i, ann) for i, (ann, is_vertex) in enumerate(children) if not is_vertex]
    matching = _best(non_vertex).matching if non_vertex else EMPTY
    if matching.size == 0:
        edge = _cross_pair(annotations, "black", "white", stats)
        if edge is not None:
            matching = MatchingRope.of_pairs([edge])

    aux = None
    if matching.size <= 1:
        crossing = _cross_pair(annotations, "white", "black", stats)
        if crossing is not None:
            white, black = crossing
            aux = (black, white)
        else:
            aux = _first(ann.aux_pair for ann in annotations)
    return NodeAnnotation(
        matching,
        aux,
        _first(ann.black for ann in annotations),
        _first(ann.white for ann in annotations),
    )


def combine_N(shape: PrimeShape, stats: Optional[SolveStats] = None) -> NodeAnnotation:
    """Closed-form maximum induced matching of an extended path/cycle or its bicomplement."""
    k = shape.k
    if shape.form.is_bip:
        picks: List[Tuple[int, int]] = [(0, 3), (1, 4)]
    else:
        count = k // 3 if shape.form.is_cycle else (k + 1) // 3
        picks = [(3 * i, 3 * i + 1) for i in range(count)]

    pairs: List[Pair] = []
    for i, j in picks:
        # representative: smallest id of the class
        u, v = shape.classes[i][0], shape.classes[j][0]
        pairs.append((u, v) if shape.colors[i] is Color.BLACK else (v, u))
    _charge(stats, len(picks))

    first, second = shape.classes[0][0], shape.classes[1][0]
    if shape.colors[0] is Color.WHITE:
        first, second = second, first
    return NodeAnnotation(MatchingRope.of_pairs(pairs), None, first, second)
