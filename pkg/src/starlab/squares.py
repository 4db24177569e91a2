"""Graph powers and the triangle-free link between stars and squares."""

from __future__ import annotations

from dataclasses import dataclass

from .canon import are_isomorphic, canonical_form
from .graph import CapacityError, Graph, GraphError, MAX_VERTICES, bits
from .stars import star_graph


class PreconditionError(GraphError):
    """Input violates an operation's documented precondition."""


def graph_power(g: Graph, k: int) -> Graph:
    """``g^k``: same vertices, ``uv`` adjacent iff ``1 <= dist(u, v) <= k``."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"power must be a positive integer, got {k!r}")
    adj = []
    for v in range(g.n):
        reach = 1 << v
        frontier = reach
        for _ in range(k):
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~reach
            if not frontier:
                break
            reach |= frontier
        adj.append(reach & ~(1 << v))
    return Graph._trusted(g.n, tuple(adj))


def girth(g: Graph) -> float:
    return g.girth()


@dataclass(frozen=True)
class TriangleFreeVerdict:
    holds: bool
    core: list[int]  # D: vertices of degree >= 2
    star_graph: Graph
    square_of_core: Graph
    witness: str | None = None


def triangle_free_identity(h: Graph) -> TriangleFreeVerdict:
    """Check ``S(h) ~ h[D]^2`` where ``D`` is the set of vertices of degree >= 2."""
    if h.n < 3:
        raise PreconditionError(f"need at least 3 vertices, got {h.n}")
    if h.has_triangle():
        raise PreconditionError("graph contains a triangle")
    core = [v for v in range(h.n) if h.degree(v) >= 2]
    s = star_graph(h).graph
    sq = graph_power(h.induced_subgraph(core), 2)
    holds = are_isomorphic(s, sq)
    witness = None
    if not holds:
        witness = (
            f"S(h) has {s.n} vertices / {s.edge_count()} edges, "
            f"h[D]^2 has {sq.n} / {sq.edge_count()}; codes "
            f"{canonical_form(s).decode()} vs {canonical_form(sq).decode()}"
        )
    return TriangleFreeVerdict(holds, core, s, sq, witness)


def pendant_extension(h: Graph) -> Graph:
    """``h`` plus one pendant per vertex; the pendant of ``v`` is vertex ``n + v``."""
    if h.n < 1:
        raise PreconditionError("pendant extension needs at least one vertex")
    if 2 * h.n > MAX_VERTICES:
        raise CapacityError(f"pendant extension of {h.n} vertices exceeds {MAX_VERTICES}")
    n = h.n
    edges = h.edges() + [(v, n + v) for v in range(n)]
    return Graph.from_edges(2 * n, edges)
