"""Structural properties of star graphs and of their pre-images."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .canon import are_isomorphic
from .critical import graph_is_star_critical
from .graph import Graph, bits
from .named import complete, diamond
from .squares import PreconditionError
from .stars import StarGraphResult, star_graph

PENDING_P4 = "pending-P4"
TERMINAL_TRIANGLE = "terminal-triangle"
VIOLATION = "violation"


@dataclass(frozen=True)
class DegreeTwoClass:
    vertex: int  # vertex of the star graph
    kind: str
    structure: tuple[int, ...] = ()  # (u, v, w, z) or (u, v, z) in the pre-image
    anchor: int | None = None
    # None on star graphs with at most three vertices, where the clause is not claimed
    neighbor_clause: bool | None = True


@dataclass
class PropertyReport:
    biconnected: bool | None = None
    cut_vertex: int | None = None
    edges_in_triangles: bool | None = None
    offending_edge: tuple[int, int] | None = None
    # (|E2|, n - 1, 4|E|/7 as a fraction string, verdict); None when skipped
    e2_bound: tuple | None = None
    degree_two: list[DegreeTwoClass] = field(default_factory=list)
    # (diam H, diam G, floor(diam H / 2) + 2, verdict)
    diameter_bound: tuple | None = None
    # (|V(G)|, n, max degree, verdict of |V(G)|^3 <= n^3 * 3^max_degree)
    mis_bound: tuple | None = None

    def as_dict(self) -> dict:
        out = asdict(self)
        out["degree_two"] = [asdict(c) for c in self.degree_two]
        for key in ("diameter_bound",):
            if out[key] is not None:
                out[key] = [None if x == float("inf") else x for x in out[key]]
        return out

    @property
    def ok(self) -> bool:
        checks = [
            self.biconnected,
            self.edges_in_triangles,
            None if self.e2_bound is None else self.e2_bound[-1],
            None if self.diameter_bound is None else self.diameter_bound[-1],
            None if self.mis_bound is None else self.mis_bound[-1],
        ]
        if any(c is False for c in checks):
            return False
        return all(c.kind != VIOLATION and c.neighbor_clause is not False for c in self.degree_two)


def e2_edges(g: Graph) -> list[tuple[int, int]]:
    """Edges with at least one endpoint of degree two."""
    return [(u, v) for u, v in g.edges() if g.degree(u) == 2 or g.degree(v) == 2]


def check_star_graph_properties(g: Graph) -> PropertyReport:
    report = PropertyReport()
    if g.n >= 3:
        cuts = g.cut_vertices()
        report.biconnected = g.is_connected() and not cuts
        report.cut_vertex = cuts[0] if cuts else None
        report.edges_in_triangles = True
        for u, v in g.edges():
            if not g.adj[u] & g.adj[v]:
                report.edges_in_triangles = False
                report.offending_edge = (u, v)
                break
    if not (are_isomorphic(g, complete(3)) or are_isomorphic(g, diamond())):
        e2 = len(e2_edges(g))
        m = g.edge_count()
        holds = e2 <= g.n - 1 and 7 * e2 <= 4 * m
        report.e2_bound = (e2, g.n - 1, f"{4 * m}/7", holds)
    return report


def _terminal_triangle(h: Graph, u: int, v: int) -> tuple[int, ...] | None:
    closed_u = h.adj[u] | 1 << u
    closed_v = h.adj[v] | 1 << v
    if closed_u != closed_v or closed_u.bit_count() != 3:
        return None
    z = next(bits(closed_u & ~(1 << u | 1 << v)))
    others = h.adj[z] & ~(1 << u | 1 << v)
    if any(h.adj[x] & h.adj[z] & ~(1 << u | 1 << v) for x in bits(others)):
        return None
    return (u, v, z)


def _pending_p4(h: Graph, v: int, leaves: list[int]) -> tuple[int, ...] | None:
    if h.adj[v] != (1 << leaves[0] | 1 << leaves[1]):
        return None
    for u, w in (leaves, leaves[::-1]):
        if h.degree(u) != 1 or h.degree(w) != 2:
            continue
        z = next(bits(h.adj[w] & ~(1 << v)))
        if h.is_independent(h.adj[z]):
            return (u, v, w, z)
    return None


def classify_degree_two(h: Graph, result: StarGraphResult | None = None) -> list[DegreeTwoClass]:
    """Find the pre-image structure behind each degree-two vertex of the star graph."""
    if result is None:
        result = star_graph(h)
    g = result.graph
    if not graph_is_star_critical(h):
        raise PreconditionError("classify_degree_two needs a star-critical graph")
    if not g.is_connected():
        raise PreconditionError("star graph is disconnected")
    if are_isomorphic(g, diamond()):
        raise PreconditionError("star graph is a diamond")
    deg2 = [a for a in range(g.n) if g.degree(a) == 2]
    out = []
    for a in deg2:
        s = result.star_of_vertex[a]
        leaves = s.leaf_list()
        found, kind = None, VIOLATION
        if len(leaves) == 1:
            found = _terminal_triangle(h, s.center, leaves[0])
            kind = TERMINAL_TRIANGLE
        elif len(leaves) == 2:
            found = _pending_p4(h, s.center, leaves)
            kind = PENDING_P4
        if found is None:
            out.append(DegreeTwoClass(a, VIOLATION, neighbor_clause=_neighbor_clause(g, a)))
            continue
        out.append(DegreeTwoClass(a, kind, found, found[-1], _neighbor_clause(g, a)))
    return out


def _neighbor_clause(g: Graph, a: int) -> bool | None:
    """Some neighbor of ``a`` has no degree-two neighbor besides ``a``."""
    if g.n <= 3:
        return None
    for b in g.neighbors(a):
        if not any(g.degree(c) == 2 for c in g.neighbors(b) if c != a):
            return True
    return False


def check_preimage_bounds(h: Graph) -> PropertyReport:
    if not h.is_connected():
        raise PreconditionError("check_preimage_bounds needs a connected graph")
    g = star_graph(h).graph
    report = PropertyReport()
    delta = h.max_degree() if h.n else 0
    # |V(G)| <= n * 3^(delta/3), cubed to stay in integers
    report.mis_bound = (g.n, h.n, delta, g.n ** 3 <= h.n ** 3 * 3 ** delta)
    if g.n and not g.is_complete():
        dh, dg = h.diameter(), g.diameter()
        limit = int(dh) // 2 + 2
        report.diameter_bound = (dh, dg, limit, dg <= limit)
    return report


def full_report(h: Graph) -> PropertyReport:
    """Star-graph properties of ``S(h)`` plus the pre-image checks on ``h``."""
    result = star_graph(h)
    report = check_star_graph_properties(result.graph)
    bounds = check_preimage_bounds(h)
    report.mis_bound = bounds.mis_bound
    report.diameter_bound = bounds.diameter_bound
    g = result.graph
    if g.n and g.is_connected() and not are_isomorphic(g, diamond()) and graph_is_star_critical(h):
        report.degree_two = classify_degree_two(h, result)
    return report
