import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import connected_graphs, graphs, to_nx
from starlab import named
from starlab.canon import are_isomorphic
from starlab.graph import CapacityError, Graph
from starlab.squares import (
    PreconditionError,
    girth,
    graph_power,
    pendant_extension,
    triangle_free_identity,
)
from starlab.stars import star_graph


class TestPower:
    def test_identity(self):
        g = named.petersen()
        assert graph_power(g, 1) == g

    def test_p4_square(self):
        assert are_isomorphic(graph_power(named.path(4), 2), named.diamond())

    def test_c5_square(self):
        assert graph_power(named.cycle(5), 2) == named.complete(5)

    def test_bad_exponent(self):
        with pytest.raises(ValueError):
            graph_power(named.path(3), 0)

    @given(graphs(max_n=12), st.integers(1, 4))
    @settings(max_examples=80, deadline=None)
    def test_against_networkx(self, g, k):
        G = nx.power(to_nx(g), k) if g.n else nx.Graph()
        expected = {tuple(sorted(e)) for e in G.edges()}
        assert set(graph_power(g, k).edges()) == expected

    @given(graphs(max_n=10, connected=True))
    @settings(max_examples=50, deadline=None)
    def test_monotone_and_stable(self, g):
        e1 = set(g.edges())
        e2 = set(graph_power(g, 2).edges())
        e3 = set(graph_power(g, 3).edges())
        assert e1 <= e2 <= e3
        d = int(g.diameter()) if g.n > 1 else 1
        assert graph_power(g, d) == graph_power(g, d + 2)


class TestTriangleFree:
    def test_c4(self):
        v = triangle_free_identity(named.cycle(4))
        assert v.holds and v.core == [0, 1, 2, 3]
        assert v.square_of_core == named.complete(4)

    def test_p4(self):
        v = triangle_free_identity(named.path(4))
        assert v.holds and v.core == [1, 2]
        assert v.square_of_core == named.complete(2)

    def test_figure_graph(self):
        assert triangle_free_identity(named.two_c4_with_pendants()).holds

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            triangle_free_identity(named.path(2))
        with pytest.raises(PreconditionError):
            triangle_free_identity(named.paw())

    @pytest.mark.parametrize("n", range(3, 8))
    def test_min_degree_two_graphs_square(self, n):
        for h in connected_graphs(n):
            if h.has_triangle() or h.min_degree() < 2:
                continue
            assert are_isomorphic(star_graph(h).graph, graph_power(h, 2))


class TestPendant:
    def test_k1(self):
        assert pendant_extension(Graph.empty(1)) == named.complete(2)

    def test_k2(self):
        assert are_isomorphic(pendant_extension(named.complete(2)), named.path(4))

    def test_labels(self):
        h = pendant_extension(named.path(3))
        assert [h.degree(v) for v in range(3, 6)] == [1, 1, 1]
        assert all(h.has_edge(v, v + 3) for v in range(3))

    def test_c4_gadget(self):
        g = star_graph(pendant_extension(named.cycle(4))).graph
        assert are_isomorphic(g, named.complete(4))

    def test_errors(self):
        with pytest.raises(PreconditionError):
            pendant_extension(Graph.empty(0))
        with pytest.raises(CapacityError):
            pendant_extension(Graph.empty(32))
        assert pendant_extension(Graph.empty(31)).n == 62


class TestGirth:
    def test_examples(self):
        assert girth(named.cycle(5)) == 5
        assert girth(named.path(6)) == math.inf
        assert girth(named.petersen()) == 5
