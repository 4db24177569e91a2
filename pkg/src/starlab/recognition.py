"""Star-graph census and recognition by breadth-first augmentation.

Level ``n`` holds every connected graph on ``n`` vertices with at most ``k``
maximal stars, one canonical representative each.  Adding a vertex never
lowers the star count, so a graph with more than ``k`` stars is never
expanded.  A graph is produced from a parent only when the new vertex is a
"preferred" deletable vertex (see ``_accept``); every graph still has such a
vertex, so levels stay complete while most duplicate children are never
canonicalized.

The census stops at the first order where graphs with exactly ``k`` stars
exist but none is star-critical: no larger graph can be a star-critical
pre-image of a ``k``-vertex star graph beyond that point.
"""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .canon import canonical_form, canonical_graph, neighborhood_masks
from .critical import first_non_critical
from .graph import CapacityError, Graph, MAX_VERTICES, bits
from .graph6 import parse_graph6, to_graph6
from .stars import count_stars, star_graph

log = logging.getLogger(__name__)

DEFAULT_MAX_K = 8
CHECKPOINT_ENV = "STARLAB_CHECKPOINT_DIR"

STAR_GRAPH = "star-graph"
NOT_STAR_GRAPH = "not-star-graph"
INCONCLUSIVE = "inconclusive"


def default_max_depth(k: int) -> int:
    return 2 * k + 3


def _invariant(adj: tuple[int, ...], v: int) -> tuple:
    return (adj[v].bit_count(), sorted(adj[u].bit_count() for u in bits(adj[v])))


def _accept(child: Graph) -> bool:
    """Keep ``child`` only if its newest vertex has a maximal invariant among
    the vertices whose deletion leaves the graph connected."""
    adj = child.adj
    y = child.n - 1
    dy = adj[y].bit_count()
    iy = None
    for v in range(y):
        dv = adj[v].bit_count()
        if dv < dy:
            continue
        if dv == dy:
            if iy is None:
                iy = _invariant(adj, y)
            if _invariant(adj, v) <= iy:
                continue
        if child.remove_vertex(v).is_connected():
            return False
    return True


def _expand_chunk(args: tuple[list[bytes], int]) -> list[bytes]:
    codes, k = args
    out: set[bytes] = set()
    for code in codes:
        g = parse_graph6(code)
        for mask in neighborhood_masks(g):
            child = g.add_vertex(mask)
            if not _accept(child):
                continue
            if count_stars(child, k) > k:
                continue
            out.add(to_graph6(canonical_graph(child)))
    return sorted(out)


@dataclass(frozen=True)
class LevelSummary:
    n: int
    graphs: int  # connected graphs on n vertices with at most k stars
    exact: int  # members with exactly k stars
    critical: int
    sample: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return dict(self.__dict__, sample=list(self.sample))


@dataclass
class CensusResult:
    k: int
    star_graphs: set[bytes]
    critical_preimages: set[bytes]
    frontier_depth: int
    terminated_by_frontier: bool
    levels: list[LevelSummary] = field(default_factory=list)
    # canonical code of a star graph -> smallest canonical pre-image found first
    preimage_of: dict[bytes, bytes] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "star_graph_count": len(self.star_graphs),
            "critical_preimage_count": len(self.critical_preimages),
            "frontier_depth": self.frontier_depth,
            "terminated_by_frontier": self.terminated_by_frontier,
            "levels": [lv.as_dict() for lv in self.levels],
            "star_graphs": sorted(c.decode() for c in self.star_graphs),
            "critical_preimages": sorted(c.decode() for c in self.critical_preimages),
            "preimage_of": {a.decode(): b.decode() for a, b in sorted(self.preimage_of.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)


@dataclass(frozen=True)
class Level:
    n: int
    codes: list[bytes]  # sorted canonical graph6 codes, all of the level
    critical: list[bytes]  # sorted codes of star-critical members with exactly k stars
    exact: int


def _checkpoint_dir(checkpoint_dir) -> Path | None:
    env = os.environ.get(CHECKPOINT_ENV)
    if env:
        checkpoint_dir = env
    return Path(checkpoint_dir) if checkpoint_dir else None


def _read_lines(path: Path) -> list[bytes]:
    return [line for line in path.read_bytes().split(b"\n") if line]


def _write_lines(path: Path, lines: list[bytes]) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_bytes(b"".join(line + b"\n" for line in lines))
    tmp.replace(path)


class _LevelWalker:
    """Produces levels 2, 3, ... of the census for one ``k``."""

    def __init__(self, k: int, workers: int = 1, checkpoint_dir=None):
        self.k = k
        self.workers = max(1, int(workers))
        self.dir = _checkpoint_dir(checkpoint_dir)
        if self.dir is not None:
            self.dir.mkdir(parents=True, exist_ok=True)

    def _paths(self, n: int) -> tuple[Path, Path] | None:
        if self.dir is None:
            return None
        stem = f"census-k{self.k}-n{n}"
        return self.dir / f"{stem}.g6", self.dir / f"{stem}.crit.g6"

    def _expand(self, codes: list[bytes]) -> list[bytes]:
        if self.workers == 1 or len(codes) < 2 * self.workers:
            return _expand_chunk((codes, self.k))
        size = max(1, len(codes) // (self.workers * 8))
        chunks = [(codes[i:i + size], self.k) for i in range(0, len(codes), size)]
        merged: set[bytes] = set()
        with ProcessPoolExecutor(self.workers) as pool:
            for part in pool.map(_expand_chunk, chunks):
                merged.update(part)
        return sorted(merged)

    def _classify(self, codes: list[bytes]) -> tuple[list[bytes], int]:
        critical = []
        exact = 0
        for code in codes:
            g = parse_graph6(code)
            if count_stars(g, self.k) != self.k:
                continue
            exact += 1
            if first_non_critical(g, self.k) is None:
                critical.append(code)
        return critical, exact

    def levels(self):
        codes = [to_graph6(Graph.from_edges(2, [(0, 1)]))]
        n = 2
        while True:
            paths = self._paths(n)
            if paths and paths[0].exists() and paths[1].exists():
                codes = _read_lines(paths[0])
                critical = _read_lines(paths[1])
                exact = sum(1 for c in codes if count_stars(parse_graph6(c), self.k) == self.k)
                log.info("k=%d n=%d loaded from checkpoint", self.k, n)
            else:
                if n > 2:
                    codes = self._expand(codes)
                critical, exact = self._classify(codes)
                if paths:
                    _write_lines(paths[0], codes)
                    _write_lines(paths[1], critical)
            log.info("k=%d n=%d graphs=%d exact=%d critical=%d", self.k, n, len(codes), exact, len(critical))
            yield Level(n, codes, critical, exact)
            if n >= MAX_VERTICES:
                return
            n += 1


def _check_k(k: int, allow_large: bool) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if k > DEFAULT_MAX_K and not allow_large:
        raise ValueError(f"k={k} exceeds {DEFAULT_MAX_K}; pass allow_large to run it anyway")


def census(k: int, max_depth: int | None = None, allow_large: bool = False,
           workers: int = 1, checkpoint_dir=None) -> CensusResult:
    _check_k(k, allow_large)
    if max_depth is None:
        max_depth = default_max_depth(k)
    result = CensusResult(k, set(), set(), 0, False)
    for level in _LevelWalker(k, workers, checkpoint_dir).levels():
        result.frontier_depth = level.n
        for code in level.critical:
            s = canonical_form(star_graph(parse_graph6(code)).graph)
            result.star_graphs.add(s)
            result.critical_preimages.add(code)
            result.preimage_of.setdefault(s, code)
        sample = tuple(c.decode() for c in level.critical[:5])
        result.levels.append(LevelSummary(level.n, len(level.codes), level.exact, len(level.critical), sample))
        # New star graphs can only come from critical members, so an all
        # non-critical nonempty level also means every star graph is older.
        if level.exact and not level.critical:
            result.terminated_by_frontier = True
            return result
        if level.n >= max_depth:
            return result
        if level.n + 1 > MAX_VERTICES:
            break
    raise CapacityError(f"census for k={k} reached {MAX_VERTICES} vertices without terminating")


def frontier_status(k: int, n: int, workers: int = 1, checkpoint_dir=None,
                    allow_large: bool = False) -> LevelSummary:
    """Summary of the order-``n`` graphs with exactly ``k`` stars, exploring up to order ``n`` regardless of termination."""
    _check_k(k, allow_large)
    if n < 2:
        raise ValueError("order must be at least 2")
    for level in _LevelWalker(k, workers, checkpoint_dir).levels():
        if level.n == n:
            exact_sample = []
            for code in level.codes:
                if count_stars(parse_graph6(code), k) == k:
                    exact_sample.append(code.decode())
                    if len(exact_sample) == 5:
                        break
            return LevelSummary(n, len(level.codes), level.exact, len(level.critical), tuple(exact_sample))
    raise CapacityError(f"order {n} exceeds {MAX_VERTICES}")


@dataclass(frozen=True)
class RecognitionOutcome:
    verdict: str
    preimage: Graph | None = None
    frontier_certificate: dict | None = None

    @property
    def is_star_graph(self) -> bool:
        return self.verdict == STAR_GRAPH

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "preimage": None if self.preimage is None else to_graph6(self.preimage).decode(),
            "frontier_certificate": self.frontier_certificate,
        }


def find_preimage(g: Graph, max_depth: int | None = None, allow_large: bool = False,
                  workers: int = 1, checkpoint_dir=None) -> RecognitionOutcome:
    k = g.n
    if k == 0:
        return RecognitionOutcome(STAR_GRAPH, Graph.empty(1))
    if k == 1:
        return RecognitionOutcome(STAR_GRAPH, Graph.from_edges(2, [(0, 1)]))
    if not g.is_connected():
        # Connected graphs with at least one edge have connected star graphs.
        return RecognitionOutcome(NOT_STAR_GRAPH, None, {
            "reason": "disconnected",
            "statement": "a star graph on two or more vertices is connected",
        })
    _check_k(k, allow_large)
    if max_depth is None:
        max_depth = default_max_depth(k)
    target = canonical_form(g)
    for level in _LevelWalker(k, workers, checkpoint_dir).levels():
        for code in level.critical:
            h = parse_graph6(code)
            if canonical_form(star_graph(h).graph) == target:
                return RecognitionOutcome(STAR_GRAPH, h)
        if level.exact and not level.critical:
            return RecognitionOutcome(NOT_STAR_GRAPH, None, {
                "reason": "frontier",
                "k": k,
                "depth": level.n,
                "members": level.exact,
                "statement": f"no graph on {level.n} vertices with {k} maximal stars is star-critical",
            })
        if level.n >= max_depth:
            return RecognitionOutcome(INCONCLUSIVE, None, {
                "reason": "depth-limit",
                "k": k,
                "depth": level.n,
                "statement": f"depth limit {max_depth} reached before the frontier",
            })
    raise CapacityError(f"recognition for k={k} reached {MAX_VERTICES} vertices")
