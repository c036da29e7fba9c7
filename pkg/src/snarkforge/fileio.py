"""Text formats for graphs, certificates, and chain specs.

Graph files: line 1 "n m", then m lines "u v" with 0-based indices, u < v,
in ascending lexicographic order (so edge indices are exactly line order).
Coloring certificates: line 1 "k m", then m lines "edge_index color".
P10-coloring certificates: m lines "edge_index p10_edge_index".
Berge-Fulkerson certificates: 6 lines, each a sorted list of edge indices.
Chain specs: "k", optional "twists:"/"partition:"/"rotation:" lines, then one
line per connector component ("K2 a b" or "STAR a b c").

All writers emit deterministic, bit-stable output.
"""

from __future__ import annotations

from .coloring import EdgeColoring
from .errors import GraphParseError, SpecError
from .graph import CubicGraph
from .loupekhine import Component, K2, LPSpec, Star
from .petersen import BFCovering, PetersenColoring


def _int_fields(line: str, count: int, lineno: int, what: str) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise GraphParseError(f"expected {count} fields for {what}, got {len(parts)}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphParseError(f"non-integer field in {what}", lineno) from None


def parse_graph(text: str) -> CubicGraph:
    lines = text.splitlines()
    if not lines:
        raise GraphParseError("empty graph file", 1)
    n, m = _int_fields(lines[0], 2, 1, "header")
    if len(lines) < m + 1:
        raise GraphParseError(f"expected {m} edge lines, found {len(lines) - 1}", len(lines))
    edges: list[tuple[int, int]] = []
    for i in range(m):
        lineno = i + 2
        u, v = _int_fields(lines[i + 1], 2, lineno, "edge")
        if u == v:
            raise GraphParseError(f"loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"vertex index out of range in edge ({u},{v})", lineno)
        if u >= v:
            raise GraphParseError(f"edge ({u},{v}) not written with u < v", lineno)
        if edges:
            if (u, v) == edges[-1]:
                raise GraphParseError(f"duplicate edge ({u},{v})", lineno)
            if (u, v) < edges[-1]:
                raise GraphParseError(
                    f"edge ({u},{v}) breaks ascending lexicographic order", lineno
                )
        edges.append((u, v))
    for extra in range(m + 1, len(lines)):
        if lines[extra].strip():
            raise GraphParseError("trailing content after edge list", extra + 1)
    return CubicGraph(n, edges)


def format_graph(g: CubicGraph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def parse_coloring(text: str) -> EdgeColoring:
    lines = [ln for ln in text.splitlines()]
    if not lines:
        raise GraphParseError("empty coloring certificate", 1)
    k, m = _int_fields(lines[0], 2, 1, "header")
    colors = [0] * m
    seen = [False] * m
    if len(lines) < m + 1:
        raise GraphParseError(f"expected {m} lines, found {len(lines) - 1}", len(lines))
    for i in range(m):
        lineno = i + 2
        e, c = _int_fields(lines[i + 1], 2, lineno, "coloring entry")
        if not (0 <= e < m):
            raise GraphParseError(f"edge index {e} out of range", lineno)
        if seen[e]:
            raise GraphParseError(f"edge {e} colored twice", lineno)
        seen[e] = True
        colors[e] = c
    return EdgeColoring(k, tuple(colors))


def format_coloring(c: EdgeColoring) -> str:
    out = [f"{c.k} {len(c.colors)}"]
    out.extend(f"{e} {col}" for e, col in enumerate(c.colors))
    return "\n".join(out) + "\n"


def parse_petersen_coloring(text: str) -> PetersenColoring:
    entries: dict[int, int] = {}
    lines = text.splitlines()
    for i, line in enumerate(lines):
        if not line.strip():
            continue
        e, img = _int_fields(line, 2, i + 1, "map entry")
        if e in entries:
            raise GraphParseError(f"edge {e} mapped twice", i + 1)
        entries[e] = img
    if sorted(entries) != list(range(len(entries))):
        raise GraphParseError("edge indices do not cover 0..m-1", len(lines))
    return PetersenColoring(tuple(entries[e] for e in range(len(entries))))


def format_petersen_coloring(pc: PetersenColoring) -> str:
    return "".join(f"{e} {img}\n" for e, img in enumerate(pc.phi))


def parse_bf_covering(text: str) -> BFCovering:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 6:
        raise GraphParseError(f"expected 6 matchings, found {len(lines)}", len(lines))
    matchings = []
    for i, line in enumerate(lines):
        try:
            edges = tuple(int(p) for p in line.split())
        except ValueError:
            raise GraphParseError("non-integer edge index", i + 1) from None
        if list(edges) != sorted(set(edges)):
            raise GraphParseError("matching not a sorted list of distinct edges", i + 1)
        matchings.append(edges)
    return BFCovering(tuple(matchings))


def format_bf_covering(bf: BFCovering) -> str:
    return "".join(" ".join(str(e) for e in m) + "\n" for m in bf.matchings)


def parse_lp_spec(text: str) -> LPSpec:
    k: int | None = None
    twists: frozenset[int] = frozenset()
    partition: tuple[int, int, int] | None = None
    rotation = 0
    components: list[Component] = []
    for i, raw in enumerate(text.splitlines()):
        lineno = i + 1
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if k is None:
            (k,) = _int_fields(line, 1, lineno, "block count")
            continue
        head, _, rest = line.partition(":")
        if head == "twists":
            try:
                twists = frozenset(int(p) for p in rest.split())
            except ValueError:
                raise GraphParseError("non-integer twist position", lineno) from None
            continue
        if head == "partition":
            r, s, t = _int_fields(rest, 3, lineno, "partition")
            partition = (r, s, t)
            continue
        if head == "rotation":
            (rotation,) = _int_fields(rest, 1, lineno, "rotation")
            continue
        parts = line.split()
        if parts[0] == "K2":
            a, b = _int_fields(" ".join(parts[1:]), 2, lineno, "K2 component")
            components.append(K2(a, b))
        elif parts[0] == "STAR":
            a, b, c = _int_fields(" ".join(parts[1:]), 3, lineno, "STAR component")
            components.append(Star(a, b, c))
        else:
            raise GraphParseError(f"unknown line {line!r}", lineno)
    if k is None:
        raise GraphParseError("missing block count", 1)
    try:
        return LPSpec(
            k=k,
            twists=twists,
            connector=tuple(components),
            partition=partition,
            rotation=rotation,
        )
    except SpecError as exc:
        raise GraphParseError(str(exc)) from exc


def format_lp_spec(spec: LPSpec) -> str:
    out = [str(spec.k)]
    if spec.twists:
        out.append("twists: " + " ".join(str(i) for i in sorted(spec.twists)))
    if spec.partition is not None:
        out.append("partition: {} {} {}".format(*spec.partition))
    if spec.rotation:
        out.append(f"rotation: {spec.rotation}")
    for comp in spec.connector:
        if isinstance(comp, K2):
            out.append(f"K2 {comp.a} {comp.b}")
        else:
            out.append(f"STAR {comp.a} {comp.b} {comp.c}")
    return "\n".join(out) + "\n"


_DOT_PALETTE = {1: "red", 2: "blue", 3: "forestgreen", 4: "orange", 5: "purple"}


def format_dot(g: CubicGraph, coloring: EdgeColoring | None = None, name: str = "G") -> str:
    """DOT text; with a coloring, edges carry label and a matching color attribute."""
    out = [f"graph {name} {{"]
    for v in range(g.n):
        out.append(f"  {v};")
    for e, (u, v) in enumerate(g.edges):
        if coloring is not None:
            c = coloring.colors[e]
            paint = _DOT_PALETTE.get(c, "black")
            out.append(f'  {u} -- {v} [label="{c}", color="{paint}"];')
        else:
            out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
