from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from mim.graph.models import InducedMatching, Pair


@dataclass(frozen=True, slots=True)
class MatchingRope:
    """Induced matching kept as a concatenation tree.

    A P node joins its children's matchings in O(children); the pairs are
    flattened once, at the root.
    """
    size: int
    pairs: Tuple[Pair, ...] = ()
    parts: Tuple["MatchingRope", ...] = ()

    @classmethod
    def of_pairs(cls, pairs: Sequence[Pair]) -> "MatchingRope":
        return cls(size=len(pairs), pairs=tuple(pairs))

    @classmethod
    def concat(cls, ropes: Sequence["MatchingRope"]) -> "MatchingRope":
        parts = tuple(rope for rope in ropes if rope.size)
        if len(parts) == 1:
            return parts[0]
        return cls(size=sum(rope.size for rope in parts), parts=parts)

    def flatten(self) -> List[Pair]:
        out: List[Pair] = []
        stack = [self]
        while stack:
            rope = stack.pop()
            out.extend(rope.pairs)
            stack.extend(reversed(rope.parts))
        return out


EMPTY = MatchingRope(size=0)


@dataclass(frozen=True, slots=True)
class NodeAnnotation:
    """Solver state of one tree node.

    ``matching`` is a maximum induced matching of the node's subgraph.
    ``aux_pair`` is a non-adjacent (black, white) pair inside the node, kept
    when the matching has at most one edge. ``black``/``white`` are any vertex
    of that color in the node, or None.
    """
    matching: MatchingRope
    aux_pair: Optional[Pair] = None
    black: Optional[int] = None
    white: Optional[int] = None

    @property
    def size(self) -> int:
        return self.matching.size

    def to_matching(self) -> InducedMatching:
        return InducedMatching(pairs=tuple(self.matching.flatten()))


@dataclass(slots=True)
class SolveStats:
    """Operation counters of one traversal."""
    nodes: int = 0
    work: int = 0

    def charge(self, units: int) -> None:
        self.work += units
