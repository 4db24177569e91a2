import pytest

from oracles import connected_graphs
from starlab import named
from starlab.critical import graph_is_star_critical
from starlab.graph import Graph
from starlab.props import (
    PENDING_P4,
    TERMINAL_TRIANGLE,
    VIOLATION,
    check_preimage_bounds,
    check_star_graph_properties,
    classify_degree_two,
    e2_edges,
    full_report,
)
from starlab.squares import PreconditionError
from starlab.canon import are_isomorphic
from starlab.stars import star_graph


class TestStarGraphProperties:
    def test_octahedron(self):
        r = check_star_graph_properties(named.octahedron())
        assert r.biconnected and r.edges_in_triangles and r.e2_bound[-1]
        assert r.e2_bound[0] == 0

    def test_gem_meets_e2_bounds_with_equality(self):
        r = check_star_graph_properties(named.gem())
        assert r.ok
        assert r.e2_bound == (4, 4, "28/7", True)

    def test_c4(self):
        r = check_star_graph_properties(named.cycle(4))
        assert r.biconnected and not r.edges_in_triangles
        assert r.offending_edge is not None and not r.ok

    def test_paw_has_cut_vertex(self):
        r = check_star_graph_properties(named.paw())
        assert not r.biconnected and r.cut_vertex == 2

    def test_exclusions(self):
        assert check_star_graph_properties(named.complete(3)).e2_bound is None
        assert check_star_graph_properties(named.diamond()).e2_bound is None

    def test_small_graphs_skip_structure(self):
        r = check_star_graph_properties(named.complete(2))
        assert r.biconnected is None and r.edges_in_triangles is None

    def test_e2_edges(self):
        assert e2_edges(named.path(4)) == [(0, 1), (1, 2), (2, 3)]
        assert e2_edges(named.complete(4)) == []

    @pytest.mark.parametrize("n", range(2, 8))
    def test_star_graphs_of_small_graphs(self, n):
        for h in connected_graphs(n):
            g = star_graph(h).graph
            if g.n >= 3:
                r = check_star_graph_properties(g)
                assert r.biconnected and r.edges_in_triangles
                assert r.e2_bound is None or r.e2_bound[-1]


class TestDegreeTwo:
    def test_p7(self):
        classes = classify_degree_two(named.path(7))
        assert [c.kind for c in classes] == [PENDING_P4, PENDING_P4]
        structures = sorted(c.structure for c in classes)
        assert structures == [(0, 1, 2, 3), (6, 5, 4, 3)]
        assert all(c.neighbor_clause for c in classes)

    def test_two_triangles(self):
        classes = classify_degree_two(named.two_triangles())
        assert classes and all(c.kind == TERMINAL_TRIANGLE for c in classes)
        assert sorted(c.anchor for c in classes) == [0, 3]

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            classify_degree_two(named.star(3))
        with pytest.raises(PreconditionError):
            classify_degree_two(named.path(6))

    @pytest.mark.parametrize("n", range(3, 8))
    def test_no_violations(self, n):
        for h in connected_graphs(n):
            if not graph_is_star_critical(h):
                continue
            g = star_graph(h).graph
            if g.n < 3 or are_isomorphic(g, named.diamond()):
                continue
            for c in classify_degree_two(h):
                assert c.kind != VIOLATION
                assert c.neighbor_clause is not False


class TestPreimageBounds:
    def test_k4(self):
        r = check_preimage_bounds(named.complete(4))
        assert r.mis_bound == (6, 4, 3, True)
        assert r.diameter_bound == (1, 2, 2, True)

    def test_two_triangles_tight(self):
        r = check_preimage_bounds(named.two_triangles())
        assert r.diameter_bound == (3, 3, 3, True)

    def test_p7(self):
        r = check_preimage_bounds(named.path(7))
        assert r.diameter_bound == (6, 2, 5, True)

    def test_complete_star_graph_skips_diameter(self):
        assert check_preimage_bounds(named.path(5)).diameter_bound is None

    def test_disconnected(self):
        with pytest.raises(PreconditionError):
            check_preimage_bounds(Graph.empty(2))

    @pytest.mark.parametrize("n", range(2, 8))
    def test_hold_on_small_graphs(self, n):
        for h in connected_graphs(n):
            r = check_preimage_bounds(h)
            assert r.mis_bound[-1]
            assert r.diameter_bound is None or r.diameter_bound[-1]


def test_full_report_json():
    import json

    r = full_report(named.path(7))
    assert r.ok and len(r.degree_two) == 2
    json.dumps(r.as_dict())
