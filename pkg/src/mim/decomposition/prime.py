from typing import List, Optional, Sequence

import networkx as nx

from mim.errors import NotStar123Free
from mim.graph.models import BipartiteGraph, VertexSet
from mim.graph.operations import bicomplement, new_graph, twin_classes

from .models import PrimeForm, PrimeShape

MIN_CLASSES = 7


def quotient_graph(g: BipartiteGraph, classes: Sequence[VertexSet]) -> BipartiteGraph:
    """Graph on class indices, adjacent when the classes' representatives are."""
    class_of = {v: i for i, members in enumerate(classes) for v in members}
    edges = set()
    for i, members in enumerate(classes):
        for u in g.adj[members[0]]:
            j = class_of[u]
            edges.add((min(i, j), max(i, j)))
    return new_graph(len(classes), [g.colors[members[0]] for members in classes], sorted(edges))


def _path_order(q: nx.Graph) -> Optional[List[int]]:
    k = q.number_of_nodes()
    if q.number_of_edges() != k - 1 or max(d for _, d in q.degree()) > 2 or not nx.is_connected(q):
        return None
    start = min(v for v, d in q.degree() if d == 1)
    return _walk(q, start, None)


def _cycle_order(q: nx.Graph) -> Optional[List[int]]:
    if any(d != 2 for _, d in q.degree()) or not nx.is_connected(q):
        return None
    return _walk(q, 0, max(q.neighbors(0)))


def _walk(q: nx.Graph, start: int, previous: Optional[int]) -> List[int]:
    # nodes are class indices, which already sort by smallest member id
    order = [start]
    current = start
    while len(order) < q.number_of_nodes():
        step = next((u for u in sorted(q.neighbors(current)) if u != previous), None)
        if step is None:
            break
        previous, current = current, step
        order.append(current)
    return order


def classify_prime(g: BipartiteGraph) -> PrimeShape:
    """Recognise an indecomposable piece as EP, EC, EPBIP or ECBIP.

    Classes come out in path/cycle order starting from the class holding the
    smallest vertex id; cycles head towards that class's smaller neighbor.
    Raises NotStar123Free when none of the four shapes fits.
    """
    classes = twin_classes(g)
    if len(classes) < MIN_CLASSES:
        raise NotStar123Free(range(g.n))
    quotient = quotient_graph(g, classes)
    tests = (
        (PrimeForm.EP, quotient, _path_order),
        (PrimeForm.EC, quotient, _cycle_order),
        (PrimeForm.EPBIP, None, _path_order),
        (PrimeForm.ECBIP, None, _cycle_order),
    )
    complemented = None
    for form, graph, ordering in tests:
        if graph is None:
            if complemented is None:
                complemented = bicomplement(quotient)
            graph = complemented
        order = ordering(graph.to_networkx())
        if order is not None:
            return PrimeShape(
                form=form,
                classes=tuple(classes[i] for i in order),
                colors=tuple(quotient.colors[i] for i in order),
            )
    raise NotStar123Free(range(g.n))
