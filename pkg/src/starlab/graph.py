"""Compact undirected simple graphs on at most 62 vertices.

Adjacency is stored as one Python int per vertex (bit ``u`` of ``adj[v]`` is set
iff ``uv`` is an edge).  Graphs are immutable and hashable, so they can be put
in sets, used as dict keys and shipped to worker processes.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 62

INFINITY = math.inf


class GraphError(ValueError):
    """Invalid graph construction or vertex reference."""


class CapacityError(GraphError):
    """An operation would exceed the 62-vertex capacity."""


class GraphFormatError(GraphError):
    """Malformed graph6 input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Undirected simple graph with bit-row adjacency."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"graph order {n} outside 0..{MAX_VERTICES}")
        adj = tuple(int(row) for row in adj)
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full or row < 0:
                raise GraphError(f"row {v} has bits outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self._set(n, adj)

    def _set(self, n: int, adj: tuple[int, ...]) -> None:
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # Hot-path constructor; callers guarantee the invariants.
        g = object.__new__(cls)
        g._set(n, adj)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __getstate__(self):
        return (self.n, self.adj)

    def __setstate__(self, state):
        self._set(*state)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"graph order {n} outside 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n, ())

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.n, self.adj))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"vertex {v!r} outside 0..{self.n - 1}")

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of the vertex set")
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            new_row = 0
            for u in bits(row):
                new_row |= 1 << perm[u]
            adj[perm[v]] = new_row
        return Graph._trusted(self.n, tuple(adj))

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on ``vertices``, relabeled 0.. in increasing order."""
        keep = sorted(set(vertices))
        for v in keep:
            self.check_vertex(v)
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            for u in bits(self.adj[v]):
                i = index.get(u)
                if i is not None:
                    row |= 1 << i
            adj.append(row)
        return Graph._trusted(len(keep), tuple(adj))

    def remove_vertex(self, v: int) -> "Graph":
        """Delete ``v``; vertices above it shift down by one."""
        self.check_vertex(v)
        low = (1 << v) - 1
        adj = []
        for u, row in enumerate(self.adj):
            if u != v:
                adj.append((row & low) | (row >> (v + 1) << v))
        return Graph._trusted(self.n - 1, tuple(adj))

    def add_vertex(self, neighborhood: int) -> "Graph":
        """Append vertex ``n`` adjacent to the vertex set encoded by ``neighborhood``."""
        if self.n >= MAX_VERTICES:
            raise CapacityError(f"cannot add a vertex to a graph with {self.n} vertices")
        if neighborhood & ~self.vertex_mask or neighborhood < 0:
            raise GraphError("neighborhood mask references missing vertices")
        new = 1 << self.n
        adj = tuple(row | new if neighborhood >> u & 1 else row for u, row in enumerate(self.adj))
        return Graph._trusted(self.n + 1, adj + (neighborhood,))

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph._trusted(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    # -- structure queries -------------------------------------------------

    def component_of(self, v: int, within: int | None = None) -> int:
        allowed = self.vertex_mask if within is None else within
        seen = 1 << v
        frontier = seen
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= self.adj[u]
            frontier = nxt & allowed & ~seen
            seen |= frontier
        return seen

    def components(self) -> list[list[int]]:
        remaining = self.vertex_mask
        out = []
        while remaining:
            v = (remaining & -remaining).bit_length() - 1
            comp = self.component_of(v, remaining)
            out.append(list(bits(comp)))
            remaining &= ~comp
        return out

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return self.component_of(0) == self.vertex_mask

    def cut_vertices(self) -> list[int]:
        """Vertices whose removal increases the number of components."""
        base = len(self.components())
        out = []
        full = self.vertex_mask
        for v in range(self.n):
            rest = full & ~(1 << v)
            count = 0
            while rest:
                u = (rest & -rest).bit_length() - 1
                rest &= ~self.component_of(u, full & ~(1 << v))
                count += 1
            if count > base - (1 if self.adj[v] == 0 else 0):
                out.append(v)
        return out

    def distances_from(self, source: int) -> list[float]:
        dist: list[float] = [INFINITY] * self.n
        dist[source] = 0
        seen = 1 << source
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for u in bits(frontier):
                nxt |= self.adj[u]
            frontier = nxt & ~seen
            seen |= frontier
            for u in bits(frontier):
                dist[u] = d
        return dist

    def distance_matrix(self) -> list[list[float]]:
        return [self.distances_from(v) for v in range(self.n)]

    def eccentricity(self, v: int) -> float:
        return max(self.distances_from(v))

    def diameter(self) -> float:
        """Largest distance; ``INFINITY`` when disconnected, 0 for n <= 1."""
        if self.n == 0:
            return 0
        return max(self.eccentricity(v) for v in range(self.n))

    def girth(self) -> float:
        """Length of a shortest cycle, ``INFINITY`` for forests."""
        best = INFINITY
        for s in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[s] = 0
            queue = deque([s])
            while queue:
                v = queue.popleft()
                if 2 * dist[v] + 1 >= best:
                    break
                for u in bits(self.adj[v]):
                    if dist[u] < 0:
                        dist[u] = dist[v] + 1
                        parent[u] = v
                        queue.append(u)
                    elif parent[v] != u:
                        best = min(best, dist[u] + dist[v] + 1)
        return best

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def is_independent(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in bits(mask))

    def simplicial_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.is_clique(self.adj[v])]

    def true_twin_pairs(self) -> list[tuple[int, int]]:
        """Pairs ``u < v`` of adjacent vertices with ``N[u] = N[v]``."""
        closed = [row | 1 << v for v, row in enumerate(self.adj)]
        return [(u, v) for u, v in self.edges() if closed[u] == closed[v]]

    def is_complete(self) -> bool:
        return all(row.bit_count() == self.n - 1 for row in self.adj)

    def has_triangle(self) -> bool:
        return any(self.adj[u] & self.adj[v] for u, v in self.edges())


def structure_report(g: Graph) -> dict:
    """Connectivity, cut vertices, diameter, girth, simplicial vertices and true twins."""
    return {
        "n": g.n,
        "edges": g.edge_count(),
        "connected": g.is_connected(),
        "cut_vertices": g.cut_vertices(),
        "diameter": g.diameter(),
        "girth": g.girth(),
        "simplicial_vertices": g.simplicial_vertices(),
        "true_twin_pairs": g.true_twin_pairs(),
        "distances": g.distance_matrix(),
    }
