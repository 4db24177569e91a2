"""Small named graphs used across the library, tests and CLI."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def star(p: int) -> Graph:
    """K_{1,p} with center 0."""
    return complete_bipartite(1, p)


def diamond() -> Graph:
    # K4 minus the edge 0-3.
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def paw() -> Graph:
    return Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def gem() -> Graph:
    # P4 0-1-2-3 plus the dominating vertex 4.
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])


def octahedron() -> Graph:
    """K_{2,2,2}: antipodal pairs (0,1), (2,3), (4,5) are the non-edges."""
    return Graph.from_edges(6, [(u, v) for u, v in combinations(range(6), 2) if u // 2 != v // 2])


def net() -> Graph:
    """Triangle 0-1-2 with pendants 3, 4, 5 on 0, 1, 2."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def critical_example() -> Graph:
    """K4 on a, b, c, d plus x adjacent to a and d (vertex order a, b, c, d, x)."""
    a, b, c, d, x = range(5)
    return Graph.from_edges(5, [(a, b), (b, c), (c, a), (a, d), (d, b), (c, d), (d, x), (x, a)])


def two_triangles() -> Graph:
    """Two triangles 0-1-2 and 3-4-5 joined by the edge 0-3."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3)])


def two_c4_with_pendants() -> Graph:
    """Two 4-cycles, each with pendants on two opposite vertices, joined by one edge.

    Cycle a0-a1-a2-a3 with pendants on a1 and a3, same for b, plus the edge a0-b2.
    """
    edges = []
    for base in (0, 6):
        edges += [(base + i, base + (i + 1) % 4) for i in range(4)]
        edges += [(base + 1, base + 4), (base + 3, base + 5)]
    edges.append((0, 6 + 2))
    return Graph.from_edges(12, edges)


NAMED = {
    "K1": lambda: complete(1),
    "K2": lambda: complete(2),
    "K3": lambda: complete(3),
    "K4": lambda: complete(4),
    "P3": lambda: path(3),
    "P4": lambda: path(4),
    "P5": lambda: path(5),
    "P6": lambda: path(6),
    "P7": lambda: path(7),
    "C4": lambda: cycle(4),
    "C5": lambda: cycle(5),
    "K13": lambda: star(3),
    "diamond": diamond,
    "paw": paw,
    "gem": gem,
    "octahedron": octahedron,
    "net": net,
    "petersen": petersen,
}
