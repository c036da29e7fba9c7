"""Batch command-line front end.

Subcommands: generate, color, search, verify, export, stats, pipeline.
Exit codes: 0 success, 1 verification failure / UNSAT / infeasible,
2 usage or parse error, 3 search budget exhausted. The SNARKFORGE_BUDGET
environment variable overrides the search node budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import coloring as col
from . import fileio
from .errors import (
    GraphParseError,
    IncompatibleSpecError,
    SnarkforgeError,
    SpecError,
)
from .fivecolor import color_theorem5, color_theorem6, find_partition
from .graph import girth, is_snark
from .loupekhine import K2, LPSpec, Star, assemble, bp_block, mansha_spec
from .petersen import (
    extract_bf_covering,
    find_petersen_coloring,
    petersen_graph,
    verify_bf_covering,
    verify_petersen_coloring,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _budget() -> int:
    raw = os.environ.get("SNARKFORGE_BUDGET")
    return int(raw) if raw else col.DEFAULT_BUDGET


def _read(path: str) -> str:
    return Path(path).read_text()


def _write(path: str, text: str) -> None:
    Path(path).write_text(text)


def _parse_ints(raw: str, expect: int, flag: str) -> tuple[int, ...]:
    try:
        values = tuple(int(p) for p in raw.split(","))
    except ValueError:
        raise SpecError(f"{flag} expects comma-separated integers, got {raw!r}") from None
    if len(values) != expect:
        raise SpecError(f"{flag} expects {expect} integers, got {len(values)}")
    return values


def _spec_from_args(args) -> LPSpec:
    if args.family == "mansha":
        return mansha_spec(args.k)
    components: list = []
    for raw in args.star or []:
        components.append(Star(*_parse_ints(raw, 3, "--star")))
    for raw in args.k2 or []:
        components.append(K2(*_parse_ints(raw, 2, "--k2")))
    twists: frozenset[int] = frozenset()
    if args.family == "lp2":
        twists = frozenset(_parse_ints(args.twists, len(args.twists.split(",")), "--twists"))
    partition = _parse_ints(args.partition, 3, "--partition") if args.partition else None
    spec = LPSpec(
        k=args.k,
        twists=twists,
        connector=tuple(components),
        partition=partition,
        rotation=args.rotation,
    )
    if spec.partition is None:
        found = find_partition(spec)
        if found is not None:
            spec = found
    return spec


def cmd_generate(args) -> int:
    if args.family == "petersen":
        _write(args.out + ".graph", fileio.format_graph(petersen_graph()))
        print(f"wrote {args.out}.graph")
        return EXIT_OK
    if args.family == "bp-block":
        _write(args.out + ".graph", fileio.format_graph(bp_block().graph))
        print(f"wrote {args.out}.graph")
        return EXIT_OK
    spec = _spec_from_args(args)
    graph, _ = assemble(spec)
    _write(args.out + ".graph", fileio.format_graph(graph))
    _write(args.out + ".lp", fileio.format_lp_spec(spec))
    print(f"wrote {args.out}.graph ({graph.n} vertices, {graph.m} edges)")
    print(f"wrote {args.out}.lp")
    return EXIT_OK


def cmd_color(args) -> int:
    if args.method in ("theorem5", "theorem6"):
        if not args.spec:
            print("error: --spec is required for the table methods", file=sys.stderr)
            return EXIT_USAGE
        spec = fileio.parse_lp_spec(_read(args.spec))
        if args.method == "theorem5" and spec.twists:
            print("error: spec has twists; use --method theorem6", file=sys.stderr)
            return EXIT_USAGE
        if spec.partition is None:
            found = find_partition(spec)
            if found is None:
                print("INFEASIBLE: no rotation and odd partition fits the connector")
                return EXIT_FAIL
            spec = found
        graph, amap = assemble(spec)
        colorer = color_theorem5 if args.method == "theorem5" else color_theorem6
        try:
            coloring = colorer(spec, graph, amap)
        except IncompatibleSpecError as exc:
            print(f"INFEASIBLE: {exc}")
            return EXIT_FAIL
        _write(args.out, fileio.format_coloring(coloring))
        print(f"wrote {args.out} (verified normal, 5 colors)")
        return EXIT_OK
    # search method
    if not args.graph:
        print("error: --graph is required for --method search", file=sys.stderr)
        return EXIT_USAGE
    graph = fileio.parse_graph(_read(args.graph))
    result = col.find_normal_coloring(graph, args.k, _budget())
    if result.status is col.SearchStatus.BUDGET_EXCEEDED:
        print(f"BUDGET_EXCEEDED after {result.nodes} nodes")
        return EXIT_BUDGET
    if result.status is col.SearchStatus.UNSAT:
        print(f"UNSAT: no normal {args.k}-edge-coloring ({result.nodes} nodes)")
        return EXIT_FAIL
    _write(args.out, fileio.format_coloring(result.coloring))
    print(f"wrote {args.out} (verified normal, {args.k} colors, {result.nodes} nodes)")
    return EXIT_OK


def cmd_search(args) -> int:
    graph = fileio.parse_graph(_read(args.graph))
    budget = _budget()
    if args.mode == "normal":
        result = col.find_normal_coloring(graph, args.k, budget)
        print(json.dumps({"mode": "normal", "k": args.k, "status": result.status.value,
                          "nodes": result.nodes}))
        if result.status is col.SearchStatus.SAT and args.out:
            _write(args.out, fileio.format_coloring(result.coloring))
        return {col.SearchStatus.SAT: EXIT_OK, col.SearchStatus.UNSAT: EXIT_FAIL,
                col.SearchStatus.BUDGET_EXCEEDED: EXIT_BUDGET}[result.status]
    if args.mode == "index":
        res = col.normal_chromatic_index(graph, args.kmax, budget)
        print(json.dumps({"mode": "index", "kmax": args.kmax, "index": res.index,
                          "budget_hit_at": res.budget_hit_at, "nodes": res.nodes}))
        if res.budget_hit_at is not None:
            return EXIT_BUDGET
        return EXIT_OK if res.index is not None else EXIT_FAIL
    # petersen
    hint = None
    if args.hint:
        hint = fileio.parse_coloring(_read(args.hint))
    result = find_petersen_coloring(graph, hint=hint, budget=budget)
    print(json.dumps({"mode": "petersen", "status": result.status.value,
                      "nodes": result.nodes, "fallback_used": result.fallback_used}))
    if result.status is col.SearchStatus.SAT and args.out:
        _write(args.out, fileio.format_petersen_coloring(result.coloring))
    return {col.SearchStatus.SAT: EXIT_OK, col.SearchStatus.UNSAT: EXIT_FAIL,
            col.SearchStatus.BUDGET_EXCEEDED: EXIT_BUDGET}[result.status]


def cmd_verify(args) -> int:
    graph = fileio.parse_graph(_read(args.graph))
    if args.kind == "snark":
        report = is_snark(graph)
        print(json.dumps({"kind": "snark", "ok": report.ok,
                          "failed_check": report.failed_check, "girth": report.girth}))
        return EXIT_OK if report.ok else EXIT_FAIL
    if not args.cert:
        print("error: --cert is required for this verifier", file=sys.stderr)
        return EXIT_USAGE
    text = _read(args.cert)
    if args.kind == "normal":
        coloring = fileio.parse_coloring(text)
        report = col.verify_normal(graph, coloring)
        print(json.dumps({"kind": "normal", "ok": report.ok,
                          "abnormal_edges": list(report.abnormal_edges),
                          "improper_at": report.improper_at}))
        return EXIT_OK if report.ok else EXIT_FAIL
    if args.kind == "petersen":
        pc = fileio.parse_petersen_coloring(text)
        report = verify_petersen_coloring(graph, pc)
        print(json.dumps({"kind": "petersen", "ok": report.ok,
                          "failing_vertex": report.failing_vertex,
                          "reason": report.reason}))
        return EXIT_OK if report.ok else EXIT_FAIL
    bf = fileio.parse_bf_covering(text)
    report = verify_bf_covering(graph, bf)
    print(json.dumps({"kind": "bf", "ok": report.ok, "violations": list(report.violations)}))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_export(args) -> int:
    graph = fileio.parse_graph(_read(args.graph))
    coloring = fileio.parse_coloring(_read(args.cert)) if args.cert else None
    if coloring is not None:
        coloring.check_against(graph)
    _write(args.out, fileio.format_dot(graph, coloring))
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_stats(args) -> int:
    graph = fileio.parse_graph(_read(args.graph))
    degrees = graph.degree_sequence()
    g = girth(graph)
    print(json.dumps({
        "vertices": graph.n,
        "edges": graph.m,
        "cubic": graph.is_cubic,
        "degree_counts": {str(d): degrees.count(d) for d in sorted(set(degrees))},
        "girth": g if g != float("inf") else "infinity",
    }))
    return EXIT_OK


def cmd_pipeline(args) -> int:
    spec = fileio.parse_lp_spec(_read(args.spec))
    if spec.partition is None:
        found = find_partition(spec)
        if found is None:
            print("stage partition: INFEASIBLE")
            return EXIT_FAIL
        spec = found
    graph, amap = assemble(spec)
    _write(args.out + ".graph", fileio.format_graph(graph))
    rows = [("graph", args.out + ".graph", f"{graph.n} vertices")]

    colorer = color_theorem6 if spec.twists else color_theorem5
    try:
        normal = colorer(spec, graph, amap)
    except IncompatibleSpecError as exc:
        print(f"stage normal-coloring: INFEASIBLE ({exc})")
        return EXIT_FAIL
    report = col.verify_normal(graph, normal)
    if not report.ok:
        print("stage normal-coloring: verification failed")
        return EXIT_FAIL
    _write(args.out + ".normal.cert", fileio.format_coloring(normal))
    rows.append(("normal-coloring", args.out + ".normal.cert", "verified"))

    search = find_petersen_coloring(graph, hint=normal, budget=_budget())
    if search.status is col.SearchStatus.BUDGET_EXCEEDED:
        print("stage petersen-coloring: BUDGET_EXCEEDED")
        return EXIT_BUDGET
    if search.status is not col.SearchStatus.SAT:
        print("stage petersen-coloring: UNSAT")
        return EXIT_FAIL
    if not verify_petersen_coloring(graph, search.coloring).ok:
        print("stage petersen-coloring: verification failed")
        return EXIT_FAIL
    _write(args.out + ".petersen.cert", fileio.format_petersen_coloring(search.coloring))
    rows.append(("petersen-coloring", args.out + ".petersen.cert", "verified"))

    bf = extract_bf_covering(graph, search.coloring)
    if not verify_bf_covering(graph, bf).ok:
        print("stage bf-covering: verification failed")
        return EXIT_FAIL
    _write(args.out + ".bf.cert", fileio.format_bf_covering(bf))
    rows.append(("bf-covering", args.out + ".bf.cert", "verified"))

    for stage, path, status in rows:
        print(f"{stage:18} {path:40} {status}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="snarkforge")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="construct a graph family member")
    p.add_argument("family", choices=["petersen", "bp-block", "lp1", "lp2", "mansha"])
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--star", action="append", metavar="A,B,C")
    p.add_argument("--k2", action="append", metavar="A,B")
    p.add_argument("--twists", default="1", metavar="I,J,...")
    p.add_argument("--partition", metavar="R,S,T")
    p.add_argument("--rotation", type=int, default=0)
    p.add_argument("--out", required=True, metavar="PREFIX")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("color", help="produce a verified normal coloring certificate")
    p.add_argument("--method", required=True, choices=["theorem5", "theorem6", "search"])
    p.add_argument("--spec", metavar="FILE.lp")
    p.add_argument("--graph", metavar="FILE.graph")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("search", help="run an oracle search")
    p.add_argument("--graph", required=True)
    p.add_argument("--mode", required=True, choices=["normal", "index", "petersen"])
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--kmax", type=int, default=7)
    p.add_argument("--hint", metavar="CERT")
    p.add_argument("--out")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="verify a certificate against a graph")
    p.add_argument("kind", choices=["normal", "petersen", "bf", "snark"])
    p.add_argument("--graph", required=True)
    p.add_argument("--cert")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="export a graph (optionally colored) as DOT")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=["dot"], default="dot")
    p.add_argument("--cert")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("stats", help="basic structural facts about a graph")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("pipeline", help="normal + P10 coloring + BF covering, all verified")
    p.add_argument("--spec", required=True)
    p.add_argument("--out", required=True, metavar="PREFIX")
    p.set_defaults(func=cmd_pipeline)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphParseError, SpecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SnarkforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
