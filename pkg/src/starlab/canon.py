"""Canonical labeling, isomorphism testing and one-vertex augmentation.

Canonical labeling is individualization-refinement: equitable refinement of an
ordered partition, then branching over a target cell.  Two kinds of symmetry
are cut from the search tree:

* twins (equal open or closed neighborhoods) sitting in the same cell, since
  swapping them is an automorphism fixing everything individualized so far;
* orbits of automorphisms discovered at earlier leaves that fix the current
  individualized prefix pointwise.

The canonical code is the graph6 encoding of the lexicographically largest
leaf, so it round-trips through the codec.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .graph import CapacityError, Graph, MAX_VERTICES, bits, to_mask
from .graph6 import to_graph6

CanonicalCode = bytes


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    changed = True
    while changed:
        changed = False
        s = 0
        while s < len(cells):
            splitter = to_mask(cells[s])
            out: list[list[int]] = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                counts = [(adj[v] & splitter).bit_count() for v in cell]
                lo, hi = min(counts), max(counts)
                if lo == hi:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v, c in zip(cell, counts):
                    groups.setdefault(c, []).append(v)
                out.extend(groups[c] for c in sorted(groups))
                split = True
            if split:
                cells = out
                changed = True
            s += 1
    return cells


def _twin_classes(adj: tuple[int, ...]) -> list[int]:
    """Class id per vertex; vertices share an id iff they are (true or false) twins."""
    ident: dict[tuple[int, int], int] = {}
    out = []
    for v, row in enumerate(adj):
        open_key = (0, row)
        closed_key = (1, row | 1 << v)
        cls = ident.get(open_key)
        if cls is None:
            cls = ident.get(closed_key)
        if cls is None:
            cls = v
        ident.setdefault(open_key, cls)
        ident.setdefault(closed_key, cls)
        out.append(cls)
    return out


class _Search:
    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.n
        self.twin = _twin_classes(g.adj)
        self.best_key: tuple[int, ...] | None = None
        self.best_order: list[int] = []
        self.first_key: tuple[int, ...] | None = None
        self.first_order: list[int] = []
        self.autos: list[list[int]] = []

    def _leaf(self, order: list[int]) -> None:
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        key = []
        for v in order:
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << pos[u]
            key.append(row)
        key = tuple(key)
        if self.first_key is None:
            self.first_key, self.first_order = key, order
            self.best_key, self.best_order = key, order
            return
        if key == self.first_key:
            self._record(self.first_order, order)
        elif key == self.best_key:
            self._record(self.best_order, order)
        elif key > self.best_key:
            self.best_key, self.best_order = key, order

    def _record(self, a: list[int], b: list[int]) -> None:
        gamma = [0] * self.n
        for x, y in zip(a, b):
            gamma[x] = y
        self.autos.append(gamma)

    def _orbit_rep(self, v: int, prefix: list[int]) -> int:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.autos:
            if all(gamma[p] == p for p in prefix):
                for x in range(self.n):
                    rx, ry = find(x), find(gamma[x])
                    if rx != ry:
                        parent[max(rx, ry)] = min(rx, ry)
        return find(v)

    def run(self, cells: list[list[int]], prefix: list[int]) -> None:
        cells = _refine(self.adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            self._leaf([c[0] for c in cells])
            return
        cell = cells[target]
        done_twins: set[int] = set()
        done: list[int] = []
        for v in cell:
            if self.twin[v] in done_twins:
                continue
            if done and self.autos:
                rep = self._orbit_rep(v, prefix)
                if any(self._orbit_rep(u, prefix) == rep for u in done):
                    continue
            rest = [u for u in cell if u != v]
            self.run(cells[:target] + [[v], rest] + cells[target + 1:], prefix + [v])
            done_twins.add(self.twin[v])
            done.append(v)


def canonical_order(g: Graph) -> list[int]:
    """Vertices of ``g`` listed in canonical position order."""
    if g.n == 0:
        return []
    search = _Search(g)
    search.run([list(range(g.n))], [])
    return search.best_order


def _apply_order(g: Graph, order: list[int]) -> Graph:
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def canonical_graph(g: Graph) -> Graph:
    return _apply_order(g, canonical_order(g))


def canonical_form(g: Graph) -> CanonicalCode:
    return to_graph6(canonical_graph(g))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


def isomorphism(g1: Graph, g2: Graph) -> list[int] | None:
    """A vertex map ``phi`` with ``uv in E(g1) <=> phi[u]phi[v] in E(g2)``, or None."""
    if g1.n != g2.n:
        return None
    o1, o2 = canonical_order(g1), canonical_order(g2)
    if _apply_order(g1, o1) != _apply_order(g2, o2):
        return None
    phi = [0] * g1.n
    for a, b in zip(o1, o2):
        phi[a] = b
    return phi


def twin_class_lists(g: Graph) -> list[list[int]]:
    """Twin classes of ``g`` (each sorted), in order of their smallest member."""
    classes: dict[int, list[int]] = {}
    for v, cls in enumerate(_twin_classes(g.adj)):
        classes.setdefault(cls, []).append(v)
    return list(classes.values())


def neighborhood_masks(g: Graph) -> Iterator[int]:
    """Nonempty neighborhoods for a new vertex, one per twin-swap equivalence.

    Swapping two twins of ``g`` is an automorphism, so only the number of
    members taken from each twin class matters; a prefix of the class stands
    for all choices of that size.
    """
    prefixes = []
    for members in twin_class_lists(g):
        options = [0]
        acc = 0
        for v in members:
            acc |= 1 << v
            options.append(acc)
        prefixes.append(options)
    for combo in product(*prefixes):
        mask = 0
        for part in combo:
            mask |= part
        if mask:
            yield mask


def augmentations(g: Graph) -> list[Graph]:
    """Connected one-vertex extensions of ``g`` up to isomorphism.

    Each member keeps ``g`` on vertices ``0..n-1``; the new vertex ``n`` is
    attached to a nonempty subset of ``V(g)``.  Order follows the
    neighborhood enumeration, so the result is deterministic.
    """
    if g.n >= MAX_VERTICES:
        raise CapacityError(f"cannot augment a graph with {g.n} vertices")
    if g.n < 1:
        raise ValueError("augmentations needs at least one vertex")
    seen: dict[bytes, Graph] = {}
    for mask in neighborhood_masks(g):
        child = g.add_vertex(mask)
        seen.setdefault(canonical_form(child), child)
    return list(seen.values())
