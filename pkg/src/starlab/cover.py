"""Star-partitioned edge clique covers: extraction, verification, reconstruction.

A cover of a graph G is a list of cliques, each split into a center part and a
leaf part.  Clique ``i`` of a cover extracted from a pre-image H corresponds to
vertex ``v_i`` of H: its center part holds the stars of H centered at ``v_i``,
its leaf part the stars having ``v_i`` as a leaf.

Verification follows the compatibility / differentiability conditions
literally.  Witnesses name the failed condition:

    cover           a clique is not a clique of G, parts overlap, or an edge is uncovered
    compat-center   a vertex has no unique center clique, or lies in fewer than two cliques
    compat-cfff     two intersecting cliques have both cf and ff nonempty
    diff-1..diff-4  the numbered differentiability condition fails for a pair in a clique
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

from .graph import Graph, GraphError, bits, to_mask
from .graph6 import parse_graph6, to_graph6
from .stars import StarGraphResult, star_graph


@dataclass(frozen=True)
class StarPartitionedCover:
    cliques: tuple[tuple[int, int], ...]  # (center mask, leaf mask) per clique

    @property
    def m(self) -> int:
        return len(self.cliques)

    @classmethod
    def from_lists(cls, cliques) -> "StarPartitionedCover":
        return cls(tuple((to_mask(c), to_mask(f)) for c, f in cliques))

    def clique(self, i: int) -> int:
        c, f = self.cliques[i]
        return c | f

    @cached_property
    def support(self) -> int:
        mask = 0
        for c, f in self.cliques:
            mask |= c | f
        return mask

    def centers_of(self, a: int) -> list[int]:
        return [i for i, (c, _) in enumerate(self.cliques) if c >> a & 1]

    def center(self, a: int) -> int | None:
        """``c(a)``: the unique clique with ``a`` in its center part, else None."""
        found = self.centers_of(a)
        return found[0] if len(found) == 1 else None

    def leaf_set(self, a: int) -> int:
        """``F(a)`` as a mask over clique indices."""
        return to_mask(i for i, (_, f) in enumerate(self.cliques) if f >> a & 1)

    def cover_set(self, a: int) -> int:
        """``Q(a)`` as a mask over clique indices."""
        return to_mask(i for i, (c, f) in enumerate(self.cliques) if (c | f) >> a & 1)

    def cf(self, i: int, j: int) -> int:
        ci, fi = self.cliques[i]
        cj, fj = self.cliques[j]
        return (ci & fj) | (fi & cj)

    def ff(self, i: int, j: int) -> int:
        return self.cliques[i][1] & self.cliques[j][1]

    def to_json(self, g: Graph) -> dict:
        return {
            "graph": to_graph6(g).decode(),
            "cliques": [{"center": list(bits(c)), "leaf": list(bits(f))} for c, f in self.cliques],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> tuple[Graph, "StarPartitionedCover"]:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            g = parse_graph6(data["graph"])
            cliques = [(q["center"], q["leaf"]) for q in data["cliques"]]
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed cover JSON: {exc}") from None
        for c, f in cliques:
            for v in list(c) + list(f):
                if not isinstance(v, int) or v < 0:
                    raise GraphError(f"invalid vertex id {v!r} in cover JSON")
        return g, cls.from_lists(cliques)


@dataclass(frozen=True)
class Witness:
    condition: str
    cliques: tuple[int, ...] = ()
    vertices: tuple[int, ...] = ()
    detail: str = ""

    def as_dict(self) -> dict:
        return {
            "condition": self.condition,
            "cliques": list(self.cliques),
            "vertices": list(self.vertices),
            "detail": self.detail,
        }


@dataclass(frozen=True)
class CoverVerdict:
    is_cover: bool
    is_compatible: bool
    is_differentiable: bool
    witness: Witness | None = None
    cf_table: tuple[tuple[int, ...], ...] = field(default=(), repr=False, compare=False)
    ff_table: tuple[tuple[int, ...], ...] = field(default=(), repr=False, compare=False)

    @property
    def valid(self) -> bool:
        return self.is_cover and self.is_compatible and self.is_differentiable

    def as_dict(self) -> dict:
        return {
            "is_cover": self.is_cover,
            "is_compatible": self.is_compatible,
            "is_differentiable": self.is_differentiable,
            "witness": None if self.witness is None else self.witness.as_dict(),
        }


def extract_cover(h: Graph) -> tuple[StarPartitionedCover, StarGraphResult]:
    """One clique per vertex of ``h`` that lies in some maximal star."""
    result = star_graph(h)
    cliques = []
    for v in range(h.n):
        center = 0
        leaf = 0
        for a, s in enumerate(result.star_of_vertex):
            if s.center == v:
                center |= 1 << a
            elif s.leaves >> v & 1:
                leaf |= 1 << a
        if center | leaf:
            cliques.append((center, leaf))
    return StarPartitionedCover(tuple(cliques)), result


def reconstruct_preimage(q: StarPartitionedCover) -> Graph:
    """Graph on the cliques, ``i ~ j`` iff ``cf(i, j)`` is nonempty."""
    edges = [(i, j) for i in range(q.m) for j in range(i) if q.cf(i, j)]
    return Graph.from_edges(q.m, edges)


def covers_nonnested(q: StarPartitionedCover) -> bool:
    """No vertex's clique set ``Q(a)`` is contained in another's."""
    vertices = list(bits(q.support))
    covers = {a: q.cover_set(a) for a in vertices}
    for a in vertices:
        for b in vertices:
            if a != b and covers[a] & ~covers[b] == 0:
                return False
    return True


class _Verifier:
    def __init__(self, g: Graph, q: StarPartitionedCover):
        self.g = g
        self.q = q
        m = q.m
        self.c = [c for c, _ in q.cliques]
        self.f = [f for _, f in q.cliques]
        self.cf = [[(self.c[i] & self.f[j]) | (self.f[i] & self.c[j]) for j in range(m)] for i in range(m)]
        self.ff = [[self.f[i] & self.f[j] for j in range(m)] for i in range(m)]
        self.vertices = list(range(g.n))
        self.F = {a: to_mask(i for i in range(m) if self.f[i] >> a & 1) for a in self.vertices}
        self.Q = {a: to_mask(i for i in range(m) if (self.c[i] | self.f[i]) >> a & 1) for a in self.vertices}
        self.centers = {a: [i for i in range(m) if self.c[i] >> a & 1] for a in self.vertices}

    # -- edge clique cover ------------------------------------------------

    def cover_witness(self) -> Witness | None:
        g = self.g
        for i, (c, f) in enumerate(self.q.cliques):
            if c & f:
                return Witness("cover", (i,), tuple(bits(c & f)), "vertex in both center and leaf part")
            if not g.is_clique(c | f):
                members = list(bits(c | f))
                for x in members:
                    for y in members:
                        if x < y and not g.has_edge(x, y):
                            return Witness("cover", (i,), (x, y), "clique contains a non-edge")
        for u, v in g.edges():
            pair = 1 << u | 1 << v
            if not any((c | f) & pair == pair for c, f in self.q.cliques):
                return Witness("cover", (), (u, v), "edge not covered")
        return None

    # -- star-compatibility -----------------------------------------------

    def compat_witness(self) -> Witness | None:
        for a in self.vertices:
            centers = self.centers[a]
            if len(centers) != 1:
                return Witness("compat-center", tuple(centers), (a,), f"vertex has {len(centers)} center cliques")
            if self.Q[a].bit_count() < 2:
                return Witness("compat-center", tuple(bits(self.Q[a])), (a,), "vertex lies in fewer than two cliques")
        m = self.q.m
        for i in range(m):
            qi = self.c[i] | self.f[i]
            for j in range(i + 1, m):
                if qi & (self.c[j] | self.f[j]) and self.cf[i][j] and self.ff[i][j]:
                    both = self.cf[i][j] | self.ff[i][j]
                    return Witness("compat-cfff", (i, j), tuple(bits(both)), "cf and ff both nonempty")
        return None

    # -- star-differentiability -------------------------------------------

    def diff_witness(self) -> Witness | None:
        for i in range(self.q.m):
            members = list(bits(self.c[i] | self.f[i]))
            for x in range(len(members)):
                for y in range(x + 1, len(members)):
                    w = self._pair(i, members[x], members[y])
                    if w is not None:
                        return w
        return None

    def _pair(self, i: int, a: int, b: int) -> Witness | None:
        ci = self.c[i]
        a_center = ci >> a & 1
        b_center = ci >> b & 1
        if a_center and b_center:
            return self._cond1(i, a, b)
        if not a_center and not b_center:
            j, k = self.centers[a][0], self.centers[b][0]
            if j != k:
                return self._cond4(i, a, b, j, k)
            return None
        x, y = (a, b) if a_center else (b, a)
        k = self.centers[y][0]
        if self.f[k] >> x & 1:
            return self._cond3(i, x, y, k)
        return self._cond2(i, x, y, k)

    def _cond1(self, i, a, b):
        conditional_failed = None
        for j in bits(self.F[a]):
            if self.f[j] >> b & 1:
                continue
            for k in bits(self.F[b]):
                if self.f[k] >> a & 1:
                    continue
                if not self.cf[j][k]:
                    continue
                # Literal second clause: if Qc_i ∩ Qf_j ∩ Qf_k is empty then cf(j,k) != ∅.
                if self.c[i] & self.f[j] & self.f[k] or self.cf[j][k]:
                    return None
                conditional_failed = (j, k)
        if conditional_failed:
            return Witness("diff-1", (i,) + conditional_failed, (a, b), "conditional clause fails")
        return Witness("diff-1", (i,), (a, b), "no leaf cliques j, k separating the pair with cf(j,k) nonempty")

    def _cond2(self, i, x, y, k):
        found = None
        for j in bits(self.F[x]):
            if self.cf[j][k] and not self.Q[y] >> j & 1:
                found = j
                break
        if found is None:
            return Witness("diff-2", (i, k), (x, y), "no j in F(a) with cf(j,k) nonempty outside Q(a')")
        rest = [j for j in bits(self.F[x]) if not self.cf[j][k]]
        if rest:
            common = self.c[i]
            for j in rest:
                common &= self.ff[j][k]
            if not common:
                return Witness("diff-2", (i, k) + tuple(rest), (x, y), "Qc_i misses the common ff(j',k) intersection")
        return None

    def _cond3(self, i, x, y, k):
        for j in bits(self.F[x] & ~(1 << k)):
            if self.cf[j][k]:
                return Witness("diff-3", (i, j, k), (x, y), "cf(j,k) nonempty for a leaf clique j of a")
        return None

    def _cond4(self, i, a, b, j, k):
        if self.c[i] & self.ff[j][k] or self.cf[j][k]:
            return None
        return Witness("diff-4", (i, j, k), (a, b), "neither Qc_i ∩ ff(j,k) nor cf(j,k) is nonempty")


def verify_cover(g: Graph, q: StarPartitionedCover) -> CoverVerdict:
    if q.support >> g.n:
        bad = max(bits(q.support))
        raise GraphError(f"cover references vertex {bad}, graph has {g.n} vertices")
    v = _Verifier(g, q)
    tables = dict(cf_table=tuple(map(tuple, v.cf)), ff_table=tuple(map(tuple, v.ff)))
    w = v.cover_witness()
    is_cover = w is None
    cw = v.compat_witness()
    is_compatible = cw is None
    if is_compatible:
        dw = v.diff_witness()
    else:
        # Differentiability presupposes a well-defined center map.
        dw = cw
    is_differentiable = dw is None
    return CoverVerdict(is_cover, is_compatible, is_differentiable, w or cw or dw, **tables)
