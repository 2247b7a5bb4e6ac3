from itertools import combinations, product

import networkx as nx
import pytest
from hypothesis import given

from conftest import PROPERTY_SETTINGS, bipartite_graphs, path_graph
from mim.decomposition import co_components, implication_components, is_associated_partition, ks_split
from mim.decomposition.complement import UnvisitedSet
from mim.errors import TooSmall
from mim.graph import BipartiteGraph, bicomplement, connected_components, new_graph
from mim.oracle import brute_force_ks_split


def implication_digraph(g: BipartiteGraph) -> nx.DiGraph:
    d = nx.DiGraph()
    d.add_nodes_from(range(g.n))
    for b in g.blacks:
        d.add_edges_from((b, w) for w in g.whites if not g.has_edge(b, w))
    for w in g.whites:
        d.add_edges_from((w, b) for b in g.adj[w])
    return d


def labeled_graphs(n: int):
    for colors in product("BW", repeat=n):
        pairs = [(u, v) for u, v in combinations(range(n), 2) if colors[u] != colors[v]]
        for chosen in product((False, True), repeat=len(pairs)):
            yield new_graph(n, colors, [pair for pair, keep in zip(pairs, chosen) if keep])


class TestUnvisitedSet:
    def test_skips_blocked_and_discarded(self):
        pool = UnvisitedSet([2, 5, 7, 9])
        pool.discard(5)
        i = pool.first_outside(0, {2})
        assert pool.get(i) == 7

    def test_exhausted(self):
        pool = UnvisitedSet([1])
        pool.discard(1)
        assert pool.get(pool.first_outside(0, set())) is None


class TestKsSplit:
    def test_p3(self):
        assert ks_split(path_graph(3)) == [(0,), (2,), (1,)]

    def test_k2(self):
        assert ks_split(new_graph(2, "BW", [(0, 1)])) == [(0,), (1,)]

    def test_two_k2_is_not_ks(self, two_k2):
        assert ks_split(two_k2) is None

    def test_p7_is_not_ks(self, p7):
        assert ks_split(p7) is None

    def test_too_small(self):
        with pytest.raises(TooSmall):
            ks_split(new_graph(1, "B", []))

    def test_brute_force_examples(self, two_k2):
        assert brute_force_ks_split(path_graph(3)) == ((0,), (1, 2))
        assert brute_force_ks_split(new_graph(2, "BW", [(0, 1)])) == ((0,), (1,))
        assert brute_force_ks_split(two_k2) is None

    @PROPERTY_SETTINGS
    @given(g=bipartite_graphs(min_n=2, max_n=9))
    def test_every_prefix_is_an_associated_partition(self, g):
        parts = ks_split(g)
        if parts is None:
            return
        assert sorted(v for part in parts for v in part) == list(range(g.n))
        for cut in range(1, len(parts)):
            first = [v for part in parts[:cut] for v in part]
            second = [v for part in parts[cut:] for v in part]
            assert is_associated_partition(g, first, second)

    @PROPERTY_SETTINGS
    @given(g=bipartite_graphs(min_n=1, max_n=10))
    def test_components_match_networkx(self, g):
        ours = {frozenset(c) for c in implication_components(g)}
        expected = {frozenset(c) for c in nx.strongly_connected_components(implication_digraph(g))}
        assert ours == expected

    @PROPERTY_SETTINGS
    @given(g=bipartite_graphs(min_n=2, max_n=12))
    def test_order_takes_the_smallest_sink_first(self, g):
        parts = ks_split(g)
        if parts is None:
            return
        condensed = nx.condensation(implication_digraph(g))
        members = nx.get_node_attributes(condensed, "members")
        expected = nx.lexicographical_topological_sort(condensed.reverse(), key=lambda c: min(members[c]))
        assert parts == [tuple(sorted(members[c])) for c in expected]

    def test_edgeless_graph_lists_whites_before_blacks(self):
        # one component per vertex; blacks become sinks only once no white is left
        n = 20000
        g = new_graph(n, "B" * (n // 2) + "W" * (n // 2), [])
        assert ks_split(g) == [(v,) for v in range(n // 2, n)] + [(v,) for v in range(n // 2)]

    @PROPERTY_SETTINGS
    @given(g=bipartite_graphs(min_n=7, max_n=8))
    def test_agrees_with_brute_force_on_random_graphs(self, g):
        assert (ks_split(g) is None) == (brute_force_ks_split(g) is None)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_agrees_with_brute_force_on_all_small_graphs(self, n):
        for g in labeled_graphs(n):
            assert (ks_split(g) is None) == (brute_force_ks_split(g) is None), g.edges

    @pytest.mark.slow
    def test_agrees_with_brute_force_on_all_six_vertex_graphs(self):
        for g in labeled_graphs(6):
            assert (ks_split(g) is None) == (brute_force_ks_split(g) is None), g.edges


class TestCoComponents:
    def test_k22(self, k22):
        assert co_components(k22) == [(0,), (1,), (2,), (3,)]

    def test_two_k2_pairs_across_components(self, two_k2):
        assert co_components(two_k2) == [(0, 3), (1, 2)]

    @PROPERTY_SETTINGS
    @given(g=bipartite_graphs(max_n=10))
    def test_matches_components_of_the_bicomplement(self, g):
        assert co_components(g) == connected_components(bicomplement(g))
