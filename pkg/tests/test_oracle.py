import numpy as np
import pytest
from hypothesis import given
from networkx.algorithms.isomorphism import GraphMatcher

from conftest import PROPERTY_SETTINGS, bipartite_graphs, path_graph
from mim import config
from mim.errors import TooLarge
from mim.generator import gen_shape
from mim.graph import InducedMatching, is_induced_matching, new_graph
from mim.oracle import (
    STAR123_EDGES,
    brute_force_ks_split,
    brute_force_mim,
    conflict_masks,
    contains_star123,
    degrees_admit_star123,
    star123,
)


class TestBruteForceMim:
    def test_p7(self, p7):
        m = brute_force_mim(p7)
        assert m.size == 2
        assert m.pairs == ((0, 1), (4, 3))

    def test_k22(self, k22):
        assert brute_force_mim(k22).size == 1

    def test_edgeless(self):
        assert brute_force_mim(new_graph(3, "BWB", [])).size == 0

    def test_conflicts_cover_shared_ends_and_bridges(self, p7):
        masks = conflict_masks(p7)
        # edges in id order: (0,1) (2,1) (2,3) (4,3) (4,5) (6,5)
        assert masks[0] == 0b000111
        assert masks[3] == 0b111110

    def test_guard(self, monkeypatch, p7):
        monkeypatch.setattr(config, "ORACLE_MAX_EDGES", 5)
        with pytest.raises(TooLarge):
            brute_force_mim(p7)

    @PROPERTY_SETTINGS
    @given(g=bipartite_graphs(max_n=9))
    def test_witness_is_maximal(self, g):
        m = brute_force_mim(g)
        assert is_induced_matching(g, m)
        for edge in g.edges:
            if edge not in m.pairs:
                assert not is_induced_matching(g, InducedMatching(pairs=m.pairs + (edge,)))


class TestContainsStar123:
    def test_pattern_itself(self):
        g = star123()
        assert g.edges == tuple(sorted(STAR123_EDGES))
        assert contains_star123(g) == tuple(range(7))

    def test_path_has_no_center(self, p7):
        assert contains_star123(p7) is None

    def test_extended_cycle_with_a_twin(self):
        assert contains_star123(gen_shape("EC", 8, [2] + [1] * 7)) is None

    def test_isolated_vertices_do_not_matter(self):
        g = new_graph(10, "BWWBWBWBWB", list(STAR123_EDGES))
        assert contains_star123(g) == tuple(range(7))

    def test_degree_filter(self, p7):
        assert degrees_admit_star123(star123())
        assert not degrees_admit_star123(p7)
        # a claw plus three isolated vertices: too few vertices of degree >= 1
        claw = new_graph(7, "BWWWBWB", [(0, 1), (0, 2), (0, 3)])
        assert not degrees_admit_star123(claw)
        assert contains_star123(claw) is None

    @PROPERTY_SETTINGS
    @given(g=bipartite_graphs(min_n=7, max_n=10))
    def test_degree_filter_never_hides_a_copy(self, g):
        if not degrees_admit_star123(g):
            assert not GraphMatcher(g.to_networkx(), star123().to_networkx()).subgraph_is_isomorphic()

    def test_guard(self):
        with pytest.raises(TooLarge):
            contains_star123(path_graph(config.STAR_MAX_VERTICES + 1))

    @pytest.mark.parametrize("seed", range(10))
    def test_invariant_under_relabeling(self, seed):
        g = new_graph(9, "BWWBWBWWB", list(STAR123_EDGES) + [(8, 7), (8, 1)])
        perm = [int(v) for v in np.random.default_rng(seed).permutation(g.n)]
        h = g.relabel(perm)
        assert (contains_star123(g) is None) == (contains_star123(h) is None)


class TestBruteForceKsSplit:
    def test_guard(self):
        with pytest.raises(TooLarge):
            brute_force_ks_split(path_graph(config.KS_BRUTE_MAX_VERTICES + 1))

    def test_single_vertex_has_no_split(self):
        assert brute_force_ks_split(new_graph(1, "B", [])) is None
