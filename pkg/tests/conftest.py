from typing import List, Tuple

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from mim.graph import BipartiteGraph, Color, new_graph

PROPERTY_SETTINGS = settings(
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


def path_graph(k: int) -> BipartiteGraph:
    """P_k on 0..k-1, vertex 0 black."""
    colors = ["B" if v % 2 == 0 else "W" for v in range(k)]
    return new_graph(k, colors, [(v, v + 1) for v in range(k - 1)])


@st.composite
def bipartite_graphs(draw: st.DrawFn, min_n: int = 1, max_n: int = 8) -> BipartiteGraph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    colors = draw(st.lists(st.sampled_from([Color.BLACK, Color.WHITE]), min_size=n, max_size=n))
    possible: List[Tuple[int, int]] = [
        (u, v) for u in range(n) for v in range(u + 1, n) if colors[u] is not colors[v]
    ]
    edges = draw(st.lists(st.sampled_from(possible), unique=True)) if possible else []
    return new_graph(n, colors, edges)


@pytest.fixture
def p7() -> BipartiteGraph:
    return path_graph(7)


@pytest.fixture
def two_k2() -> BipartiteGraph:
    return new_graph(4, "BWBW", [(0, 1), (2, 3)])


@pytest.fixture
def k22() -> BipartiteGraph:
    return new_graph(4, "BBWW", [(0, 2), (0, 3), (1, 2), (1, 3)])


@pytest.fixture
def write_file(tmp_path):
    def write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write
