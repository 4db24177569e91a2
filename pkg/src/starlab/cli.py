"""Command-line interface: ``starlab <subcommand> ...``.

Exit status is 0 on success, 1 on a negative verdict and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import cover as cover_mod
from .critical import bound_report, critical_core, is_star_critical
from .graph import Graph, GraphError
from .graph6 import parse_graph6, to_graph6
from .props import check_star_graph_properties, classify_degree_two, full_report
from .recognition import INCONCLUSIVE, STAR_GRAPH, census, find_preimage
from .squares import graph_power, pendant_extension, triangle_free_identity
from .stars import iterated_star, maximal_stars, star_graph

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_arg(text: str) -> str:
    if text.startswith("@"):
        try:
            return Path(text[1:]).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {text[1:]}: {exc.strerror}") from None
    return text


def _graph(text: str) -> Graph:
    raw = _read_arg(text)
    lines = [line.strip() for line in raw.splitlines() if line.strip()]
    if not lines:
        raise InputError("empty graph input")
    return parse_graph6(lines[0])


def _cover(text: str):
    raw = _read_arg(text)
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None
    return cover_mod.StarPartitionedCover.from_json(data)


def _dot(g: Graph) -> str:
    lines = ["graph G {"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines)


def _emit_graph(args, g: Graph, extra: dict | None = None) -> None:
    if args.dot:
        print(_dot(g))
    elif args.json:
        print(json.dumps({"graph": to_graph6(g).decode(), **(extra or {})}, indent=2))
    else:
        print(to_graph6(g).decode())


def _json(obj) -> None:
    print(json.dumps(obj, indent=2, default=_jsonable))


def _jsonable(x):
    if isinstance(x, float):
        return None
    if isinstance(x, (bytes, bytearray)):
        return x.decode()
    if isinstance(x, set):
        return sorted(x)
    raise TypeError(f"not serializable: {type(x).__name__}")


# -- subcommands ------------------------------------------------------------

def cmd_stars(args) -> int:
    stars = maximal_stars(_graph(args.graph))
    if args.json:
        _json([{"center": s.center, "leaves": s.leaf_list()} for s in stars])
    else:
        for s in stars:
            print(s)
    return EXIT_OK


def cmd_star_graph(args) -> int:
    h = _graph(args.graph)
    if args.iterate > 1:
        _emit_graph(args, iterated_star(h, args.iterate))
        return EXIT_OK
    result = star_graph(h)
    stars = [{"center": s.center, "leaves": s.leaf_list()} for s in result.star_of_vertex]
    _emit_graph(args, result.graph, {"stars": stars})
    return EXIT_OK


def cmd_power(args) -> int:
    _emit_graph(args, graph_power(_graph(args.graph), args.k))
    return EXIT_OK


def cmd_pendant(args) -> int:
    _emit_graph(args, pendant_extension(_graph(args.graph)))
    return EXIT_OK


def cmd_girth(args) -> int:
    value = _graph(args.graph).girth()
    text = "inf" if value == float("inf") else str(int(value))
    if args.json:
        _json({"girth": None if value == float("inf") else int(value)})
    else:
        print(text)
    return EXIT_OK


def cmd_tri_free_check(args) -> int:
    verdict = triangle_free_identity(_graph(args.graph))
    if args.json:
        _json({
            "holds": verdict.holds,
            "core": verdict.core,
            "star_graph": to_graph6(verdict.star_graph).decode(),
            "square_of_core": to_graph6(verdict.square_of_core).decode(),
            "witness": verdict.witness,
        })
    else:
        print("holds" if verdict.holds else f"fails: {verdict.witness}")
    return EXIT_OK if verdict.holds else EXIT_NEGATIVE


def cmd_extract_cover(args) -> int:
    h = _graph(args.graph)
    q, result = cover_mod.extract_cover(h)
    _json(q.to_json(result.graph))
    return EXIT_OK


def cmd_check_cover(args) -> int:
    g, q = _cover(args.cover)
    verdict = cover_mod.verify_cover(g, q)
    if args.json:
        _json(verdict.as_dict())
    else:
        print(f"cover: {verdict.is_cover}")
        print(f"compatible: {verdict.is_compatible}")
        print(f"differentiable: {verdict.is_differentiable}")
        if verdict.witness:
            w = verdict.witness
            print(f"witness: {w.condition} cliques={list(w.cliques)} vertices={list(w.vertices)} ({w.detail})")
    return EXIT_OK if verdict.valid else EXIT_NEGATIVE


def cmd_reconstruct(args) -> int:
    _, q = _cover(args.cover)
    _emit_graph(args, cover_mod.reconstruct_preimage(q))
    return EXIT_OK


def cmd_critical(args) -> int:
    report = is_star_critical(_graph(args.graph))
    if args.json:
        _json({
            "star_critical": report.is_star_critical,
            "vertices": [
                {"vertex": v, "critical": ev.critical, "categories": list(ev.categories)}
                for v, ev in sorted(report.evidence.items())
            ],
        })
    else:
        for v, ev in sorted(report.evidence.items()):
            state = "critical " + ",".join(ev.categories) if ev.critical else "non-critical"
            print(f"{v}: {state}")
        print("star-critical" if report.is_star_critical else "not star-critical")
    return EXIT_OK


def cmd_core(args) -> int:
    _emit_graph(args, critical_core(_graph(args.graph)))
    return EXIT_OK


def cmd_bounds(args) -> int:
    report = bound_report(_graph(args.graph))
    if args.json:
        _json(report.as_dict())
    else:
        for key, value in report.as_dict().items():
            print(f"{key}: {value}")
    return EXIT_OK if report.holds or report.k1_anomaly else EXIT_NEGATIVE


def cmd_census(args) -> int:
    result = census(args.k, max_depth=args.max_depth, allow_large=args.allow_large,
                    workers=args.workers, checkpoint_dir=args.checkpoint)
    if args.json:
        print(result.to_json())
        return EXIT_OK
    print(f"k={result.k}")
    for lv in result.levels:
        print(f"  n={lv.n} graphs={lv.graphs} exact={lv.exact} critical={lv.critical}")
    print(f"star graphs: {len(result.star_graphs)}")
    print(f"critical pre-images: {len(result.critical_preimages)}")
    how = "frontier" if result.terminated_by_frontier else "depth limit"
    print(f"stopped at n={result.frontier_depth} ({how})")
    for code in sorted(result.star_graphs):
        print(f"  {code.decode()} <- {result.preimage_of[code].decode()}")
    return EXIT_OK


def cmd_recognize(args) -> int:
    outcome = find_preimage(_graph(args.graph), max_depth=args.max_depth, allow_large=args.allow_large,
                            workers=args.workers, checkpoint_dir=args.checkpoint)
    if args.json:
        _json(outcome.as_dict())
    elif outcome.verdict == STAR_GRAPH:
        print(f"star graph; pre-image {to_graph6(outcome.preimage).decode()}")
    elif outcome.verdict == INCONCLUSIVE:
        print(f"inconclusive: {outcome.frontier_certificate['statement']}")
    else:
        print(f"not a star graph: {outcome.frontier_certificate['statement']}")
    return EXIT_OK if outcome.verdict == STAR_GRAPH else EXIT_NEGATIVE


def cmd_props(args) -> int:
    g = _graph(args.graph)
    report = full_report(g) if args.preimage else check_star_graph_properties(g)
    if args.json:
        _json(report.as_dict())
    else:
        for key, value in report.as_dict().items():
            if value not in (None, []):
                print(f"{key}: {value}")
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_classify_deg2(args) -> int:
    classes = classify_degree_two(_graph(args.graph))
    if args.json:
        _json([c.__dict__ for c in classes])
    else:
        for c in classes:
            print(f"{c.vertex}: {c.kind} {list(c.structure)} anchor={c.anchor} neighbor-clause={c.neighbor_clause}")
    bad = any(c.kind == "violation" or c.neighbor_clause is False for c in classes)
    return EXIT_NEGATIVE if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="starlab", description="Star graphs of maximal induced stars.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--dot", action="store_true", help="DOT output for graph results")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text, arg="graph", arg_help="graph6 string or @file"):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument(arg, help=arg_help)
        p.set_defaults(func=func)
        return p

    add("stars", cmd_stars, "list maximal induced stars")
    add("star-graph", cmd_star_graph, "star graph S(H)").add_argument(
        "--iterate", type=int, default=1, metavar="I", help="apply the operator I times")
    add("power", cmd_power, "graph power G^k").add_argument("-k", type=int, required=True)
    add("pendant", cmd_pendant, "attach one pendant vertex to every vertex")
    add("girth", cmd_girth, "length of a shortest cycle")
    add("tri-free-check", cmd_tri_free_check, "check S(H) ~ H[D]^2 for a triangle-free H")
    add("extract-cover", cmd_extract_cover, "star-partitioned clique cover of S(H) as JSON")
    cover_help = "cover JSON string or @file"
    add("check-cover", cmd_check_cover, "verify a cover JSON", "cover", cover_help)
    add("reconstruct", cmd_reconstruct, "pre-image from a cover JSON", "cover", cover_help)
    add("critical", cmd_critical, "star-critical vertices")
    add("core", cmd_core, "delete non-critical vertices until star-critical")
    add("bounds", cmd_bounds, "pre-image size bound for a star-critical graph")
    add("props", cmd_props, "structural checks on a star graph").add_argument(
        "--preimage", action="store_true", help="treat the input as a pre-image H and check S(H)")
    add("classify-deg2", cmd_classify_deg2, "structures behind degree-two star graph vertices")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--checkpoint", metavar="DIR", help="directory for level files")
    search.add_argument("--workers", type=int, default=1)
    search.add_argument("--max-depth", type=int, default=None)
    search.add_argument("--allow-large", action="store_true", help="permit k above 8")
    p = sub.add_parser("census", parents=[common, search], help="all star graphs on k vertices")
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=cmd_census)
    p = sub.add_parser("recognize", parents=[common, search], help="decide whether G is a star graph")
    p.add_argument("graph", help="graph6 string or @file")
    p.set_defaults(func=cmd_recognize)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.verbose:
        logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (InputError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
