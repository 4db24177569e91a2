"""Slow, independent reference implementations used as test oracles."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import networkx as nx
from hypothesis import strategies as st
from networkx.generators.atlas import graph_atlas_g

from starlab.graph import Graph


def from_nx(G: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(G.nodes()))}
    return Graph.from_edges(len(index), [(index[u], index[v]) for u, v in G.edges()])


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


@lru_cache(maxsize=None)
def _atlas() -> tuple[Graph, ...]:
    return tuple(from_nx(G) for G in graph_atlas_g())


def connected_graphs(n: int) -> list[Graph]:
    """Every connected graph on ``n <= 7`` vertices, one per isomorphism class."""
    assert n <= 7
    return [g for g in _atlas() if g.n == n and g.is_connected()]


def all_graphs(n: int) -> list[Graph]:
    assert n <= 7
    return [g for g in _atlas() if g.n == n]


def _is_induced_star(g: Graph, vertices: tuple[int, ...]) -> bool:
    if len(vertices) < 2:
        return False
    for c in vertices:
        others = [v for v in vertices if v != c]
        if all(g.has_edge(c, v) for v in others) and not any(
            g.has_edge(a, b) for a, b in combinations(others, 2)
        ):
            return True
    return False


def brute_star_sets(g: Graph) -> set[frozenset[int]]:
    """Vertex sets of maximal induced stars, by scanning all subsets."""
    stars = set()
    for size in range(2, g.n + 1):
        for vs in combinations(range(g.n), size):
            if _is_induced_star(g, vs):
                stars.add(frozenset(vs))
    return {
        s for s in stars
        if not any(_is_induced_star(g, tuple(sorted(s | {w}))) for w in range(g.n) if w not in s)
    }


def brute_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    e2 = set(g2.edges())
    for p in permutations(range(g1.n)):
        if all(tuple(sorted((p[u], p[v]))) in e2 for u, v in g1.edges()):
            return True
    return False


def brute_girth(g: Graph) -> float:
    """Shortest cycle via deleting each edge and measuring the detour."""
    best = float("inf")
    for u, v in g.edges():
        G = to_nx(g)
        G.remove_edge(u, v)
        try:
            best = min(best, nx.shortest_path_length(G, u, v) + 1)
        except nx.NetworkXNoPath:
            pass
    return best


def brute_star_critical(g: Graph) -> bool:
    from starlab.stars import star_graph

    s = star_graph(g).graph
    return all(
        not nx.is_isomorphic(to_nx(s), to_nx(star_graph(g.remove_vertex(v)).graph))
        for v in range(g.n)
    )


@st.composite
def graphs(draw, max_n=12, min_n=0, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # hang each vertex off an earlier one so the result is connected
        for v in range(1, n):
            edges.append((draw(st.integers(0, v - 1)), v))
    return Graph.from_edges(n, set(edges))
