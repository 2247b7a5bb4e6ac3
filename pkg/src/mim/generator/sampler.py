"""Random decomposition trees with an exact vertex budget.

Trees are built top-down. Every node gets the number of vertices its subtree
must hold, and the choices open to it depend on where it sits:

- P children contain an edge (S, K+S with a black leaf first and a white leaf
  last, or N), so a P node has a matching of its children's total size.
- S children are P, N, or K+S nodes made only of leaves with a white leaf
  first and a black leaf last; each has a matching of size 2 or a
  non-adjacent black/white pair.
- K+S children are leaves, P, S or N nodes.

Past ``max_depth`` or when the weights leave nothing feasible, a node falls
back to a K+S node of leaves (or, under a K+S node, a P node of two of them).

With ``dense_max`` set, budgets above it draw no S node, give K+S nodes a
single non-leaf child, and cut leaf runs into a P node of short K+S chunks.
"""
import enum
import logging
from typing import List, Tuple

import numpy as np

from mim.decomposition.models import DecompNode, NodeKind, PrimeForm, PrimeShape
from mim.decomposition.reconstruct import reconstruct
from mim.graph.models import BipartiteGraph, Color

from .models import GenConfig

logger = logging.getLogger(__name__)

MIN_SPLIT = 4  # smallest P or S node: two children of two vertices


class Context(enum.Enum):
    ROOT = "root"
    P_CHILD = "p"
    S_CHILD = "s"
    KS_CHILD = "ks"


class _TreeSampler:
    def __init__(self, cfg: GenConfig):
        self.cfg = cfg
        self.rng = np.random.default_rng(cfg.seed)
        self.next_id = 0

    # vertices

    def _leaf(self, color: Color) -> DecompNode:
        node = DecompNode.leaf(self.next_id, color)
        self.next_id += 1
        return node

    def _random_color(self) -> Color:
        return Color.BLACK if self.rng.random() < 0.5 else Color.WHITE

    def _split(self, budget: int, count: int, minimum: int) -> List[int]:
        rest = budget - count * minimum
        extra = self.rng.multinomial(rest, [1.0 / count] * count)
        return [minimum + int(x) for x in extra]

    def _dense(self, budget: int) -> bool:
        return self.cfg.dense_max is not None and budget > self.cfg.dense_max

    # node kinds

    def _prime_options(self, budget: int) -> List[Tuple[PrimeForm, int]]:
        low, high = self.cfg.class_size_range
        return [
            (form, k)
            for form in self.cfg.forms
            for k in range(7, self.cfg.k_max + 1)
            if not (form.is_cycle and k % 2) and k * low <= budget <= k * high
        ]

    def _prime(self, budget: int) -> DecompNode:
        options = self._prime_options(budget)
        form, k = options[int(self.rng.integers(len(options)))]
        low, high = self.cfg.class_size_range
        sizes = [low] * k
        for _ in range(budget - k * low):
            open_classes = [i for i in range(k) if sizes[i] < high]
            sizes[open_classes[int(self.rng.integers(len(open_classes)))]] += 1
        color = self._random_color()
        classes, colors = [], []
        for size in sizes:
            classes.append(tuple(range(self.next_id, self.next_id + size)))
            colors.append(color)
            self.next_id += size
            color = color.other
        return DecompNode.prime(PrimeShape(form=form, classes=tuple(classes), colors=tuple(colors)))

    def _ks_leaves(self, budget: int, context: Context) -> DecompNode:
        if self._dense(budget):
            if context is Context.P_CHILD:
                first = self._leaf(Color.BLACK)
                middle = self._chunked(budget - 2)
                return DecompNode.internal(NodeKind.KS, [first, middle, self._leaf(Color.WHITE)])
            return self._chunked(budget)
        colors = [self._random_color() for _ in range(budget)]
        if context is Context.P_CHILD:
            colors[0], colors[-1] = Color.BLACK, Color.WHITE
        elif context is Context.S_CHILD:
            colors[0], colors[-1] = Color.WHITE, Color.BLACK
        return DecompNode.internal(NodeKind.KS, [self._leaf(c) for c in colors])

    def _chunked(self, budget: int) -> DecompNode:
        """P node of K+S leaf runs, none longer than ``dense_max``."""
        count = max(2, -(-budget // self.cfg.dense_max))
        base, extra = divmod(budget, count)
        sizes = [base + 1] * extra + [base] * (count - extra)
        return DecompNode.internal(NodeKind.P, [self._ks_leaves(size, Context.P_CHILD) for size in sizes])

    def _fallback(self, budget: int, context: Context) -> DecompNode:
        if budget == 1:
            return self._leaf(self._random_color())
        if context is Context.KS_CHILD:
            if self._dense(budget):
                return self._chunked(budget)
            first = budget // 2
            return DecompNode.internal(
                NodeKind.P,
                [self._ks_leaves(first, Context.P_CHILD), self._ks_leaves(budget - first, Context.P_CHILD)],
            )
        return self._ks_leaves(budget, context)

    def _join(self, kind: NodeKind, budget: int, depth: int) -> DecompNode:
        count = int(self.rng.integers(2, min(self.cfg.max_children, budget // 2) + 1))
        context = Context.P_CHILD if kind is NodeKind.P else Context.S_CHILD
        children = [self.sample(part, depth + 1, context) for part in self._split(budget, count, 2)]
        return DecompNode.internal(kind, children)

    def _ks(self, budget: int, depth: int, context: Context) -> DecompNode:
        if context is Context.S_CHILD or depth + 1 >= self.cfg.max_depth or budget < MIN_SPLIT + 1:
            return self._ks_leaves(budget, context)
        count = int(self.rng.integers(2, self.cfg.max_children + 1))
        leaves = int((self.rng.random(count) < self.cfg.leaf_probability).sum())
        inner = 1 if self._dense(budget) else max(count - leaves, 1)
        leaves = count - inner
        while leaves + inner * MIN_SPLIT > budget and inner > 1:
            inner -= 1
        leaves = min(leaves, budget - inner * MIN_SPLIT)
        if inner + leaves < 2:
            return self._ks_leaves(budget, context)
        budgets = [1] * leaves + self._split(budget - leaves, inner, MIN_SPLIT)
        order = self.rng.permutation(len(budgets))
        budgets = [budgets[i] for i in order]
        if context is Context.P_CHILD:
            # a black first and a white last give the node an edge
            colors = {0: Color.BLACK, len(budgets) - 1: Color.WHITE}
        else:
            colors = {}
        children = []
        for position, part in enumerate(budgets):
            if part == 1:
                children.append(self._leaf(colors.get(position) or self._random_color()))
            else:
                children.append(self.sample(part, depth + 1, Context.KS_CHILD))
        return DecompNode.internal(NodeKind.KS, children)

    # dispatch

    def _options(self, budget: int, depth: int, context: Context) -> List[Tuple[NodeKind, float]]:
        weights = self.cfg.op_weights
        options = []
        if depth < self.cfg.max_depth:
            if context is not Context.KS_CHILD and budget >= 2:
                options.append((NodeKind.KS, weights.ks))
            if context is not Context.P_CHILD and budget >= MIN_SPLIT:
                options.append((NodeKind.P, weights.p))
            if context is not Context.S_CHILD and budget >= MIN_SPLIT and not self._dense(budget):
                options.append((NodeKind.S, weights.s))
        if self._prime_options(budget):
            options.append((NodeKind.N, weights.n))
        return [(kind, weight) for kind, weight in options if weight > 0]

    def sample(self, budget: int, depth: int = 0, context: Context = Context.ROOT) -> DecompNode:
        if budget == 1 and context in (Context.ROOT, Context.KS_CHILD):
            return self._leaf(self._random_color())
        options = self._options(budget, depth, context)
        if not options:
            return self._fallback(budget, context)
        weights = np.array([weight for _, weight in options])
        kind = options[int(self.rng.choice(len(options), p=weights / weights.sum()))][0]
        if kind is NodeKind.N:
            return self._prime(budget)
        if kind is NodeKind.KS:
            return self._ks(budget, depth, context)
        return self._join(kind, budget, depth)


def gen_tree(cfg: GenConfig) -> DecompNode:
    """Random tree on exactly ``cfg.target_n`` leaves with ids 0..n-1."""
    tree = _TreeSampler(cfg).sample(cfg.target_n)
    logger.debug("sampled %s root over %d vertices (seed %d)", tree.kind.value, cfg.target_n, cfg.seed)
    return tree


def gen_graph(cfg: GenConfig) -> BipartiteGraph:
    return reconstruct(gen_tree(cfg))
