import logging
from typing import List, Optional, Union

from mim.errors import NotStar123Free
from mim.graph.models import BipartiteGraph, VertexSet
from mim.graph.operations import connected_components, induced_subgraph

from .complement import co_components
from .ks_split import ks_split
from .models import DecompNode, NodeKind, PrimeShape
from .prime import classify_prime

logger = logging.getLogger(__name__)


class _Frame:
    __slots__ = ("graph", "origin", "allow_ks", "kind", "shape", "slots", "node")

    def __init__(self, graph: BipartiteGraph, origin: VertexSet, allow_ks: bool):
        self.graph = graph
        self.origin = origin
        self.allow_ks = allow_ks
        self.kind: Optional[NodeKind] = None
        self.shape: Optional[PrimeShape] = None
        self.slots: List[Union["_Frame", DecompNode]] = []
        self.node: Optional[DecompNode] = None


def _child(frame: _Frame, part: VertexSet, allow_ks: bool) -> Union[_Frame, DecompNode]:
    if len(part) == 1:
        (v,) = part
        return DecompNode.leaf(frame.origin[v], frame.graph.colors[v])
    sub, local = induced_subgraph(frame.graph, part)
    return _Frame(sub, tuple(frame.origin[v] for v in local), allow_ks)


def _expand(frame: _Frame) -> None:
    g = frame.graph
    if g.n == 1:
        frame.node = DecompNode.leaf(frame.origin[0], g.colors[0])
        return

    if frame.allow_ks:
        parts = ks_split(g)
        if parts is not None:
            # K+S components are not K+S themselves: start them at the P test
            frame.kind = NodeKind.KS
            frame.slots = [_child(frame, part, allow_ks=False) for part in parts]
            return

    for kind, splitter in ((NodeKind.P, connected_components), (NodeKind.S, co_components)):
        parts = splitter(g)
        if len(parts) > 1:
            frame.kind = kind
            frame.slots = [_child(frame, part, allow_ks=True) for part in parts]
            return

    try:
        shape = classify_prime(g)
    except NotStar123Free as exc:
        raise NotStar123Free(frame.origin[v] for v in exc.vertices) from None
    logger.debug("prime piece %s with %d classes on %d vertices", shape.form.value, shape.k, g.n)
    frame.kind = NodeKind.N
    frame.shape = shape.relabel(frame.origin)


def decompose(g: BipartiteGraph) -> DecompNode:
    """Canonical decomposition tree of g, in g's vertex ids.

    Splits are tried in the order K+S, parallel, series; what is left is
    classified as a prime shape. Runs with an explicit stack, so deep trees do
    not hit the recursion limit.
    """
    root = _Frame(g, tuple(range(g.n)), allow_ks=True)
    frames = []
    pending = [root]
    while pending:
        frame = pending.pop()
        frames.append(frame)
        _expand(frame)
        pending.extend(slot for slot in frame.slots if isinstance(slot, _Frame))

    # children were expanded after their parents
    for frame in reversed(frames):
        if frame.node is not None:
            continue
        if frame.kind is NodeKind.N:
            frame.node = DecompNode.prime(frame.shape)
        else:
            children = [slot.node if isinstance(slot, _Frame) else slot for slot in frame.slots]
            frame.node = DecompNode.internal(frame.kind, children)
    return root.node
