"""Star-critical vertices and graphs, the pre-image size bound, and monotonicity."""

from __future__ import annotations

from dataclasses import dataclass, field

from .canon import augmentations, canonical_form, isomorphism
from .graph import Graph, bits
from .squares import PreconditionError
from .stars import MaximalStar, count_stars, maximal_stars, star_graph

STAR_COUNT_CHANGED = "star-count-changed"
STAR_ABSORBED = "star-absorbed"
EDGE_LOST = "edge-lost"
# Critical, yet none of the three mechanisms above applies on its own.
STAR_GRAPH_CHANGED = "star-graph-changed"


def _drop_bit(mask: int, v: int) -> int:
    """Re-index a vertex mask of ``h`` as a mask of ``h - v``."""
    low = (1 << v) - 1
    return (mask & low) | (mask >> (v + 1) << v)


@dataclass(frozen=True)
class VertexEvidence:
    vertex: int
    critical: bool
    categories: tuple[str, ...] = ()
    # Non-critical only: star graph vertex a of h maps to isomorphism[a] in S(h - v).
    isomorphism: tuple[int, ...] | None = None

    def __bool__(self):
        return self.critical


@dataclass
class CriticalityReport:
    critical: list[int]
    non_critical: list[int]
    evidence: dict[int, VertexEvidence] = field(default_factory=dict)

    @property
    def is_star_critical(self) -> bool:
        return not self.non_critical


def _categories(h: Graph, v: int, stars: list[MaximalStar], reduced: list[MaximalStar]) -> list[str]:
    tags = []
    if len(stars) != len(reduced):
        tags.append(STAR_COUNT_CHANGED)
    reduced_masks = {s.vertex_mask for s in reduced}
    bit = 1 << v
    for s in stars:
        m = s.vertex_mask
        if m & bit and (m & ~bit).bit_count() >= 2 and _drop_bit(m & ~bit, v) not in reduced_masks:
            tags.append(STAR_ABSORBED)
            break
    survivors = [
        s.vertex_mask
        for s in stars
        if not s.vertex_mask & bit or _drop_bit(s.vertex_mask & ~bit, v) in reduced_masks
    ]
    if any((a & b) == bit for i, a in enumerate(survivors) for b in survivors[:i]):
        tags.append(EDGE_LOST)
    return tags


def is_vertex_star_critical(h: Graph, v: int) -> VertexEvidence:
    """Whether deleting ``v`` changes the star graph up to isomorphism."""
    h.check_vertex(v)
    stars = maximal_stars(h)
    reduced_graph = h.remove_vertex(v)
    reduced = maximal_stars(reduced_graph)
    if len(stars) == len(reduced):
        phi = isomorphism(star_graph(h).graph, star_graph(reduced_graph).graph)
        if phi is not None:
            return VertexEvidence(v, False, (), tuple(phi))
    tags = _categories(h, v, stars, reduced) or [STAR_GRAPH_CHANGED]
    return VertexEvidence(v, True, tuple(tags))


def revalidate(h: Graph, ev: VertexEvidence) -> bool:
    """Recompute ``S(h - v)`` and confirm the recorded classification."""
    g = star_graph(h).graph
    g2 = star_graph(h.remove_vertex(ev.vertex)).graph
    if not ev.critical:
        phi = ev.isomorphism
        if phi is None or g.n != g2.n or sorted(phi) != list(range(g.n)):
            return False
        return all(g.has_edge(a, b) == g2.has_edge(phi[a], phi[b]) for a in range(g.n) for b in range(a))
    if canonical_form(g) == canonical_form(g2):
        return False
    stars = maximal_stars(h)
    reduced = maximal_stars(h.remove_vertex(ev.vertex))
    expected = _categories(h, ev.vertex, stars, reduced) or [STAR_GRAPH_CHANGED]
    return tuple(expected) == ev.categories


def is_star_critical(h: Graph) -> CriticalityReport:
    report = CriticalityReport([], [])
    for v in range(h.n):
        ev = is_vertex_star_critical(h, v)
        report.evidence[v] = ev
        (report.critical if ev.critical else report.non_critical).append(v)
    return report


def first_non_critical(h: Graph, k: int | None = None, code: bytes | None = None) -> int | None:
    """Lowest non-star-critical vertex, or None; faster than a full report.

    ``k`` and ``code`` (star count and canonical code of ``S(h)``) may be
    supplied when already known.
    """
    if k is None:
        k = count_stars(h)
    for v in range(h.n):
        reduced = h.remove_vertex(v)
        if count_stars(reduced, k) != k:
            continue
        if code is None:
            code = canonical_form(star_graph(h).graph)
        if canonical_form(star_graph(reduced).graph) == code:
            return v
    return None


def graph_is_star_critical(h: Graph) -> bool:
    return first_non_critical(h) is None


def critical_core(h: Graph) -> Graph:
    """Delete the lowest-index non-critical vertex until every vertex is critical."""
    if not h.is_connected():
        raise PreconditionError("critical_core needs a connected graph")
    g = h
    while True:
        v = first_non_critical(g)
        if v is None:
            return g
        g = g.remove_vertex(v)


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    bound: float
    holds: bool
    corrected_bound: float
    holds_corrected: bool
    k1_anomaly: bool
    simplicial: tuple[int, ...]
    # |V(H)| <= |S(H)| when there is no simplicial vertex.
    no_simplicial_bound_holds: bool | None
    # |V(H)| <= 2|S(H)| when every simplicial vertex is a leaf.
    leaf_simplicial_bound_holds: bool | None

    def as_dict(self) -> dict:
        return dict(self.__dict__, simplicial=list(self.simplicial))


def size_bound(k: int) -> float:
    return (3 * k * k - k) / 2


def bound_report(h: Graph) -> BoundReport:
    if not graph_is_star_critical(h):
        raise PreconditionError("bound_report needs a star-critical graph")
    n = h.n
    k = count_stars(h)
    bound = size_bound(k)
    corrected = bound + k
    simplicial = h.simplicial_vertices()
    no_simp = n <= k if not simplicial else None
    leaf_simp = n <= 2 * k if simplicial and all(h.degree(v) == 1 for v in simplicial) else None
    return BoundReport(
        n=n,
        k=k,
        bound=bound,
        holds=n <= bound,
        corrected_bound=corrected,
        holds_corrected=n <= corrected,
        k1_anomaly=k == 1,
        simplicial=tuple(simplicial),
        no_simplicial_bound_holds=no_simp,
        leaf_simplicial_bound_holds=leaf_simp,
    )


@dataclass(frozen=True)
class MonotonicityResult:
    holds: bool
    checked: int
    counterexample: Graph | None = None

    def __bool__(self):
        return self.holds


def monotonicity_check(h: Graph) -> MonotonicityResult:
    """Every one-vertex extension is non-critical or has at least one more star."""
    if graph_is_star_critical(h):
        raise PreconditionError("monotonicity_check needs a graph with a non-critical vertex")
    base = count_stars(h)
    checked = 0
    for child in augmentations(h):
        checked += 1
        if count_stars(child) >= base + 1:
            continue
        if first_non_critical(child) is None:
            return MonotonicityResult(False, checked, child)
    return MonotonicityResult(True, checked)


def non_center_vertices(h: Graph) -> list[int]:
    """Vertices that center no maximal star; always simplicial."""
    centers = 0
    for s in maximal_stars(h):
        centers |= 1 << s.center
    return list(bits(h.vertex_mask & ~centers))
