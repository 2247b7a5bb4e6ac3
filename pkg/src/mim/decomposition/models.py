from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from mim.errors import MalformedTree
from mim.graph.models import Color, VertexSet


class NodeKind(str, Enum):
    LEAF = "leaf"
    P = "P"
    S = "S"
    KS = "KS"
    N = "N"
    PPRIME = "P'"


class PrimeForm(str, Enum):
    EP = "EP"
    EC = "EC"
    EPBIP = "EPBIP"
    ECBIP = "ECBIP"

    @property
    def is_cycle(self) -> bool:
        return self in (PrimeForm.EC, PrimeForm.ECBIP)

    @property
    def is_bip(self) -> bool:
        return self in (PrimeForm.EPBIP, PrimeForm.ECBIP)


class PrimeShape(BaseModel):
    """Classification of an indecomposable piece.

    ``classes`` are the monochromatic classes V1..Vk in path/cycle order (for
    the BIP forms, the order of the path/cycle before bicomplementing) and
    ``colors`` their colors, which alternate along that order.
    """
    model_config = ConfigDict(frozen=True)

    form: PrimeForm
    classes: Tuple[VertexSet, ...]
    colors: Tuple[Color, ...]

    @property
    def k(self) -> int:
        return len(self.classes)

    @model_validator(mode="after")
    def _check(self):
        if self.k < 7:
            raise MalformedTree(f"{self.form.value} needs at least 7 classes, got {self.k}")
        if len(self.colors) != self.k:
            raise MalformedTree("one color per class required")
        if any(not cls for cls in self.classes):
            raise MalformedTree("empty class in prime shape")
        steps = self.k if self.form.is_cycle else self.k - 1
        for i in range(steps):
            if self.colors[i] is self.colors[(i + 1) % self.k]:
                raise MalformedTree(f"classes {i + 1} and {(i + 1) % self.k + 1} share a color")
        return self

    def relabel(self, origin: VertexSet) -> "PrimeShape":
        return PrimeShape(
            form=self.form,
            classes=tuple(tuple(sorted(origin[v] for v in cls)) for cls in self.classes),
            colors=self.colors,
        )


class DecompNode(BaseModel):
    """Node of the canonical decomposition tree.

    Leaves carry their vertex and color; N nodes carry their shape and have
    one child per class (a leaf for a singleton class, a P' node otherwise).
    """
    model_config = ConfigDict(frozen=True)

    kind: NodeKind
    children: Tuple["DecompNode", ...] = ()
    vertices: VertexSet
    color: Optional[Color] = None
    shape: Optional[PrimeShape] = None

    @classmethod
    def leaf(cls, vertex: int, color: Color) -> "DecompNode":
        return cls(kind=NodeKind.LEAF, vertices=(vertex,), color=color)

    @classmethod
    def internal(cls, kind: NodeKind, children, shape: Optional[PrimeShape] = None) -> "DecompNode":
        children = tuple(children)
        vertices = tuple(v for child in children for v in child.vertices)
        return cls(kind=kind, children=children, vertices=vertices, shape=shape)

    @classmethod
    def prime(cls, shape: PrimeShape) -> "DecompNode":
        children = []
        for cls_vertices, color in zip(shape.classes, shape.colors):
            leaves = [cls.leaf(v, color) for v in cls_vertices]
            children.append(leaves[0] if len(leaves) == 1 else cls.internal(NodeKind.PPRIME, leaves))
        return cls.internal(NodeKind.N, children, shape=shape)

    @property
    def is_leaf(self) -> bool:
        return self.kind is NodeKind.LEAF

    @model_validator(mode="after")
    def _check_shape_rules(self):
        kind = self.kind
        if kind is NodeKind.LEAF:
            if self.children or len(self.vertices) != 1 or self.color is None:
                raise MalformedTree("a leaf has one vertex, a color and no children")
            return self
        if len(self.children) < 2:
            raise MalformedTree(f"{kind.value} node needs at least 2 children")
        if kind is NodeKind.N:
            if self.shape is None or self.shape.k != len(self.children):
                raise MalformedTree("N node needs a shape with one class per child")
            for child, cls_vertices in zip(self.children, self.shape.classes):
                if tuple(sorted(child.vertices)) != cls_vertices:
                    raise MalformedTree("N node children do not match the shape classes")
        elif self.shape is not None:
            raise MalformedTree(f"{kind.value} node cannot carry a prime shape")
        for child in self.children:
            if child.kind is NodeKind.PPRIME and kind is not NodeKind.N:
                raise MalformedTree("P' nodes only appear under N nodes")
            if child.is_leaf and kind in (NodeKind.P, NodeKind.S):
                raise MalformedTree(f"a leaf cannot be a child of a {kind.value} node")
        if kind is NodeKind.PPRIME:
            if any(not child.is_leaf for child in self.children):
                raise MalformedTree("P' children must be leaves")
            if len({child.color for child in self.children}) != 1:
                raise MalformedTree("P' children must share one color")
        return self
