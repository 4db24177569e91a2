import json

import pytest

from oracles import connected_graphs
from starlab import named
from starlab.canon import are_isomorphic, canonical_form
from starlab.critical import graph_is_star_critical
from starlab.graph import Graph
from starlab.graph6 import parse_graph6
from starlab.recognition import (
    INCONCLUSIVE,
    NOT_STAR_GRAPH,
    STAR_GRAPH,
    census,
    default_max_depth,
    find_preimage,
    frontier_status,
)
from starlab.squares import graph_power
from starlab.stars import count_stars, star_graph


class TestFrontier:
    def test_k4_n9_has_no_critical_member(self, census_dir):
        s = frontier_status(4, 9, checkpoint_dir=census_dir)
        assert s.exact > 0 and s.critical == 0

    def test_k1_n2(self):
        s = frontier_status(1, 2)
        assert (s.graphs, s.exact, s.critical) == (1, 1, 1)
        assert parse_graph6(s.sample[0]) == named.complete(2)

    def test_k3_n3_contains_triangle(self):
        s = frontier_status(3, 3)
        assert canonical_form(named.complete(3)).decode() in s.sample

    def test_bad_order(self):
        with pytest.raises(ValueError):
            frontier_status(3, 1)

    @pytest.mark.parametrize("k", range(1, 6))
    def test_levels_against_atlas(self, k, census_dir):
        for n in range(2, 8):
            pool = [h for h in connected_graphs(n) if count_stars(h) <= k]
            exact = [h for h in pool if count_stars(h) == k]
            crit = [h for h in exact if graph_is_star_critical(h)]
            s = frontier_status(k, n, checkpoint_dir=census_dir)
            assert (s.graphs, s.exact, s.critical) == (len(pool), len(exact), len(crit))


class TestCensus:
    def test_small_k(self, censuses):
        for k, graphs in ((1, [named.complete(1)]), (2, [named.complete(2)]), (3, [named.complete(3)])):
            r = censuses(k)
            assert r.terminated_by_frontier
            assert r.star_graphs == {canonical_form(g) for g in graphs}

    def test_k4_star_graphs(self, censuses):
        r = censuses(4)
        assert r.star_graphs == {canonical_form(named.diamond()), canonical_form(named.complete(4))}
        assert r.terminated_by_frontier and r.frontier_depth <= 9

    def test_soundness(self, censuses):
        for k in range(1, 6):
            r = censuses(k)
            for s, pre in r.preimage_of.items():
                assert canonical_form(star_graph(parse_graph6(pre)).graph) == s
            for code in r.critical_preimages:
                h = parse_graph6(code)
                assert count_stars(h) == k and graph_is_star_critical(h)

    @pytest.mark.parametrize("k", range(1, 6))
    def test_critical_preimages_complete_up_to_7(self, k, censuses):
        # every star-critical pre-image with k stars on at most 7 vertices
        expected = {
            canonical_form(h)
            for n in range(2, 8)
            for h in connected_graphs(n)
            if count_stars(h) == k and graph_is_star_critical(h)
        }
        got = {c for c in censuses(k).critical_preimages if parse_graph6(c).n <= 7}
        assert got == expected

    def test_no_duplicates(self, censuses):
        r = censuses(5)
        for codes in (r.star_graphs, r.critical_preimages):
            assert all(canonical_form(parse_graph6(c)) == c for c in codes)

    def test_depth_limit(self):
        r = census(4, max_depth=5)
        assert not r.terminated_by_frontier and r.frontier_depth == 5

    def test_default_depth(self):
        assert default_max_depth(4) == 11

    def test_large_k_gated(self):
        with pytest.raises(ValueError):
            census(9)
        with pytest.raises(ValueError):
            census(0)

    def test_json(self, censuses):
        data = json.loads(censuses(4).to_json())
        assert data["star_graph_count"] == 2 and len(data["levels"]) == data["frontier_depth"] - 1

    def test_workers_and_resume_agree(self, tmp_path):
        one = census(4)
        two = census(4, workers=2)
        first = census(4, checkpoint_dir=tmp_path)
        files = sorted(p.name for p in tmp_path.iterdir())
        assert "census-k4-n5.g6" in files and "census-k4-n5.crit.g6" in files
        resumed = census(4, checkpoint_dir=tmp_path)
        for r in (two, first, resumed):
            assert r.as_dict() == one.as_dict()


class TestFindPreimage:
    def test_diamond(self, census_dir):
        out = find_preimage(named.diamond(), checkpoint_dir=census_dir)
        assert out.verdict == STAR_GRAPH
        assert are_isomorphic(star_graph(out.preimage).graph, named.diamond())

    def test_octahedron(self, census_dir):
        out = find_preimage(named.octahedron(), checkpoint_dir=census_dir)
        assert out.is_star_graph and are_isomorphic(out.preimage, named.complete(4))

    def test_c4(self, census_dir):
        out = find_preimage(named.cycle(4), checkpoint_dir=census_dir)
        assert out.verdict == NOT_STAR_GRAPH
        assert out.frontier_certificate["reason"] == "frontier"
        assert out.frontier_certificate["depth"] <= 9

    @pytest.mark.slow
    def test_square_of_net(self, census_dir):
        out = find_preimage(graph_power(named.net(), 2), checkpoint_dir=census_dir)
        assert out.verdict == NOT_STAR_GRAPH and out.frontier_certificate is not None

    def test_disconnected(self):
        out = find_preimage(Graph.empty(3))
        assert out.verdict == NOT_STAR_GRAPH
        assert out.frontier_certificate["reason"] == "disconnected"

    def test_trivial_orders(self):
        assert find_preimage(Graph.empty(0)).preimage == Graph.empty(1)
        assert find_preimage(Graph.empty(1)).preimage == named.complete(2)

    def test_inconclusive(self):
        out = find_preimage(named.cycle(4), max_depth=5)
        assert out.verdict == INCONCLUSIVE and out.preimage is None
        json.dumps(out.as_dict())
