"""Maximal induced stars and the star operator.

Stars come out in a fixed order: first the single-edge stars (edges between
true twins, lexicographic, centered at the lower endpoint), then for each
center ``v`` in vertex order the stars ``{v} + M`` for every maximal
independent set ``M`` of ``H[N(v)]`` with ``|M| >= 2``.  Maximal independent
sets are maximal cliques of the complement, enumerated Bron-Kerbosch style
with a pivot of least degree inside the candidate set (ties to the lowest
index), which is the largest-complement-degree pivot.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import CapacityError, Graph, GraphError, MAX_VERTICES, bits, to_mask


@dataclass(frozen=True, order=True)
class MaximalStar:
    center: int
    leaves: int  # bit set

    @property
    def vertex_mask(self) -> int:
        return self.leaves | 1 << self.center

    def leaf_list(self) -> list[int]:
        return list(bits(self.leaves))

    def vertices(self) -> list[int]:
        return sorted(self.leaf_list() + [self.center])

    def __str__(self):
        return f"{self.center}: " + " ".join(str(v) for v in self.leaf_list())


@dataclass(frozen=True)
class StarGraphResult:
    graph: Graph
    star_of_vertex: tuple[MaximalStar, ...]


def _maximal_independent_sets(adj: tuple[int, ...], candidates: int) -> Iterator[int]:
    """Maximal independent sets of the subgraph induced on ``candidates``."""
    # Each frame: (R, P, X, branch-mask still to visit).
    def pivot_branch(p: int, x: int) -> int:
        best_u = -1
        best_deg = None
        for u in bits(p | x):
            d = (adj[u] & p).bit_count()
            if best_deg is None or d < best_deg:
                best_u, best_deg = u, d
        # Vertices of P that are not complement-neighbors of the pivot.
        return p & (adj[best_u] | 1 << best_u)

    if not candidates:
        return
    stack = [(0, candidates, 0, pivot_branch(candidates, 0))]
    while stack:
        r, p, x, branch = stack.pop()
        if not branch:
            continue
        low = branch & -branch
        w = low.bit_length() - 1
        # Re-push the parent with w moved from P to X.
        stack.append((r, p & ~low, x | low, branch & ~low))
        keep = ~(adj[w] | low)
        nr, np_, nx = r | low, p & keep, x & keep
        if not np_ and not nx:
            yield nr
        elif np_:
            stack.append((nr, np_, nx, pivot_branch(np_, nx)))


def iter_maximal_stars(h: Graph) -> Iterator[MaximalStar]:
    """Stream the maximal induced stars of ``h`` in enumeration order."""
    adj = h.adj
    closed = [row | 1 << v for v, row in enumerate(adj)]
    for v in range(h.n):
        for u in bits(adj[v] & ~((1 << (v + 1)) - 1)):
            if closed[u] == closed[v]:
                yield MaximalStar(v, 1 << u)
    for v in range(h.n):
        nbrs = adj[v]
        if nbrs.bit_count() < 2 or h.is_clique(nbrs):
            continue
        for m in _maximal_independent_sets(adj, nbrs):
            if m & (m - 1):
                yield MaximalStar(v, m)


def maximal_stars(h: Graph) -> list[MaximalStar]:
    return list(iter_maximal_stars(h))


def count_stars(h: Graph, limit: int | None = None) -> int:
    """Number of maximal stars; stops early once the count exceeds ``limit``."""
    total = 0
    for _ in iter_maximal_stars(h):
        total += 1
        if limit is not None and total > limit:
            break
    return total


def intersection_graph(masks: list[int]) -> Graph:
    k = len(masks)
    if k > MAX_VERTICES:
        raise CapacityError(f"intersection graph would have {k} vertices")
    adj = [0] * k
    for a in range(k):
        ma = masks[a]
        for b in range(a + 1, k):
            if ma & masks[b]:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return Graph._trusted(k, tuple(adj))


def star_graph(h: Graph) -> StarGraphResult:
    """Intersection graph of the maximal stars of ``h`` (empty graph if ``h`` has no edges)."""
    stars = tuple(iter_maximal_stars(h))
    return StarGraphResult(intersection_graph([s.vertex_mask for s in stars]), stars)


def iterated_star(h: Graph, i: int) -> Graph:
    if not isinstance(i, int) or i < 1:
        raise ValueError(f"iteration count must be a positive integer, got {i!r}")
    g = h
    for step in range(1, i + 1):
        stars = maximal_stars(g)
        if len(stars) > MAX_VERTICES:
            raise CapacityError(
                f"iteration {step} produces a star graph with {len(stars)} vertices (limit {MAX_VERTICES})"
            )
        g = intersection_graph([s.vertex_mask for s in stars])
    return g


def is_induced_star(h: Graph, center: int, leaves: int) -> bool:
    if not leaves or leaves >> center & 1:
        return False
    return leaves & ~h.adj[center] == 0 and h.is_independent(leaves)


def is_maximal_star(h: Graph, s: MaximalStar) -> bool:
    """True iff ``s`` is an induced star of ``h`` contained in no larger induced star."""
    h.check_vertex(s.center)
    if s.leaves & ~h.vertex_mask or s.leaves < 0:
        raise GraphError("star leaves reference missing vertices")
    if not is_induced_star(h, s.center, s.leaves):
        return False
    c = s.center
    outside = h.vertex_mask & ~s.vertex_mask
    if s.leaves.bit_count() >= 2:
        # Center is forced; only another leaf could be added.
        return not any(not (h.adj[w] & s.leaves) for w in bits(h.adj[c] & outside))
    (leaf,) = bits(s.leaves)
    # A single edge extends iff some outside vertex sees exactly one endpoint.
    for w in bits(outside):
        if (h.adj[w] >> c & 1) != (h.adj[w] >> leaf & 1):
            return False
    return True


def format_stars(stars: list[MaximalStar]) -> str:
    return "".join(f"{s}\n" for s in stars)


def star_from_vertices(center: int, leaves) -> MaximalStar:
    return MaximalStar(center, to_mask(leaves))
