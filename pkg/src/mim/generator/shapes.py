import logging
from typing import Optional, Sequence, Union

import numpy as np

from mim.decomposition.models import DecompNode, PrimeForm, PrimeShape
from mim.decomposition.reconstruct import reconstruct
from mim.errors import BadShapeParams
from mim.graph.models import BipartiteGraph, Color
from mim.graph.operations import new_graph
from mim.oracle.star import STAR123_COLORS, STAR123_EDGES

logger = logging.getLogger(__name__)

ADVERSARIAL_MAX_EXTRAS = 5
ADVERSARIAL_EDGE_PROBABILITY = 0.3


def gen_shape(
    form: Union[PrimeForm, str],
    k: int,
    class_sizes: Sequence[int],
    seed_offset: Optional[int] = None,
) -> BipartiteGraph:
    """A pure extended path/cycle (or its bicomplement) with the given class sizes.

    Ids follow class order with V1 black unless ``seed_offset`` is given, in
    which case the vertices are shuffled by a permutation seeded with it.
    """
    form = PrimeForm(form)
    if k < 7:
        raise BadShapeParams(f"{form.value} needs k >= 7, got {k}")
    if form.is_cycle and k % 2:
        raise BadShapeParams(f"{form.value} is bipartite only for even k, got {k}")
    if len(class_sizes) != k:
        raise BadShapeParams(f"expected {k} class sizes, got {len(class_sizes)}")
    if any(size < 1 for size in class_sizes):
        raise BadShapeParams("class sizes must be positive")

    classes, colors, start = [], [], 0
    for i, size in enumerate(class_sizes):
        classes.append(tuple(range(start, start + int(size))))
        colors.append(Color.BLACK if i % 2 == 0 else Color.WHITE)
        start += int(size)
    g = reconstruct(DecompNode.prime(PrimeShape(form=form, classes=tuple(classes), colors=tuple(colors))))
    if seed_offset is not None:
        g = g.relabel([int(v) for v in np.random.default_rng(seed_offset).permutation(g.n)])
    return g


def gen_adversarial(seed: int, extras: Optional[int] = None) -> BipartiteGraph:
    """Star123 on vertices 0..6 plus up to five random extra vertices.

    Extra edges always touch an extra vertex, so the pattern stays induced.
    """
    rng = np.random.default_rng(seed)
    if extras is None:
        extras = int(rng.integers(0, ADVERSARIAL_MAX_EXTRAS + 1))
    colors = [Color(c) for c in STAR123_COLORS]
    colors += [Color.BLACK if rng.random() < 0.5 else Color.WHITE for _ in range(extras)]
    edges = list(STAR123_EDGES)
    n = len(colors)
    for v in range(len(STAR123_COLORS), n):
        for u in range(v):
            if colors[u] is not colors[v] and rng.random() < ADVERSARIAL_EDGE_PROBABILITY:
                edges.append((u, v))
    logger.debug("planted Star123 with %d extra vertices and %d extra edges", extras, len(edges) - 6)
    return new_graph(n, colors, edges)
