import math

import networkx as nx
import pytest
from hypothesis import given, settings

from oracles import all_graphs, brute_girth, graphs, to_nx
from starlab import named
from starlab.graph import CapacityError, Graph, GraphError, GraphFormatError, structure_report
from starlab.graph6 import parse_graph6, to_graph6


class TestGraph:
    def test_rejects_asymmetric_rows(self):
        with pytest.raises(GraphError):
            Graph(2, [0b10, 0])

    def test_rejects_loops(self):
        with pytest.raises(GraphError):
            Graph(1, [0b1])

    def test_rejects_bits_beyond_order(self):
        with pytest.raises(GraphError):
            Graph(2, [0b110, 0b1])

    def test_capacity(self):
        Graph.empty(62)
        with pytest.raises(CapacityError):
            Graph.empty(63)
        with pytest.raises(CapacityError):
            Graph.empty(62).add_vertex(0)

    def test_remove_vertex_closes_gap(self):
        g = named.path(4).remove_vertex(1)
        assert g.n == 3
        assert g.edges() == [(1, 2)]

    def test_induced_subgraph_relabels_in_order(self):
        g = named.cycle(5).induced_subgraph([4, 0, 1])
        assert g.edges() == [(0, 1), (0, 2)]

    def test_relabel(self):
        g = named.path(3).relabel([2, 0, 1])
        assert sorted(g.edges()) == [(0, 1), (0, 2)]

    def test_hashable_and_equal(self):
        assert {named.cycle(4), named.cycle(4)} == {named.cycle(4)}

    def test_vertex_out_of_range(self):
        with pytest.raises(GraphError):
            named.path(3).check_vertex(3)
        with pytest.raises(GraphError):
            named.path(3).remove_vertex(-1)


class TestStructureQueries:
    def test_p4(self):
        g = named.path(4)
        assert g.cut_vertices() == [1, 2]
        assert g.diameter() == 3

    def test_k4(self):
        g = named.complete(4)
        assert len(g.true_twin_pairs()) == 6
        assert g.girth() == 3

    def test_petersen(self):
        g = named.petersen()
        assert g.girth() == 5
        assert g.diameter() == 2

    def test_disconnected_diameter_is_infinite(self):
        assert Graph.empty(2).diameter() == math.inf

    def test_forest_girth(self):
        assert named.star(4).girth() == math.inf
        assert named.cycle(5).girth() == 5

    @pytest.mark.parametrize("n", range(1, 8))
    def test_against_networkx(self, n):
        for g in all_graphs(n):
            G = to_nx(g)
            assert g.is_connected() == nx.is_connected(G)
            assert sorted(g.cut_vertices()) == sorted(nx.articulation_points(G))
            if nx.is_connected(G):
                assert g.diameter() == nx.diameter(G)
            assert g.girth() == brute_girth(g)
            assert g.simplicial_vertices() == [
                v for v in G if all(G.has_edge(a, b) for a in G[v] for b in G[v] if a < b)
            ]

    def test_report_keys(self):
        rep = structure_report(named.paw())
        assert rep["cut_vertices"] == [2]
        assert rep["girth"] == 3


class TestGraph6:
    def test_examples(self):
        assert parse_graph6("@") == Graph.empty(1)
        assert parse_graph6("A_") == named.complete(2)
        assert parse_graph6("C~") == named.complete(4)
        assert to_graph6(Graph.empty(1)) == b"@"
        assert to_graph6(named.complete(2)) == b"A_"
        assert to_graph6(named.complete(4)) == b"C~"

    def test_header_and_newline(self):
        assert parse_graph6(b">>graph6<<C~\n") == named.complete(4)

    def test_bad_byte_offset(self):
        with pytest.raises(GraphFormatError) as exc:
            parse_graph6("C~ ")
        assert exc.value.offset == 2

    def test_too_many_vertices(self):
        with pytest.raises(GraphFormatError) as exc:
            parse_graph6("~?@A")
        assert exc.value.offset == 0

    def test_wrong_length(self):
        with pytest.raises(GraphFormatError):
            parse_graph6("C")
        with pytest.raises(GraphFormatError):
            parse_graph6("C~~")

    def test_nonzero_padding(self):
        # n=3 has 3 edge bits; the low 3 bits of the byte are padding
        with pytest.raises(GraphFormatError) as exc:
            parse_graph6(bytes([66, 63 + 0b000001]))
        assert exc.value.offset == 1

    def test_matches_networkx_encoder(self):
        for g in all_graphs(6)[:50]:
            assert to_graph6(g) == nx.to_graph6_bytes(to_nx(g), header=False).strip()

    @given(graphs(max_n=62))
    @settings(max_examples=150, deadline=None)
    def test_round_trip(self, g):
        assert parse_graph6(to_graph6(g)) == g
