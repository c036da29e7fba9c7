"""Edge colorings: poor/rich classification, normality verification, exact search.

Color classes are 1..k. An edge uv of a cubic graph is poor when the palettes
of u and v union to 3 colors, rich when they union to 5; anything else (size 4)
is abnormal. A proper coloring is *normal* when every edge is poor or rich.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import ImproperColoringError, MalformedColoringError, NonCubicError
from .graph import CubicGraph, bfs_edge_order

DEFAULT_BUDGET = 10**8


class EdgeClass(Enum):
    POOR = "poor"
    RICH = "rich"
    ABNORMAL = "abnormal"


class SearchStatus(Enum):
    SAT = "sat"
    UNSAT = "unsat"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class EdgeColoring:
    """Total assignment of colors 1..k to the host graph's edge indices."""

    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise MalformedColoringError("k must be >= 1")

    def check_against(self, g: CubicGraph) -> None:
        if len(self.colors) != g.m:
            raise MalformedColoringError(
                f"coloring has {len(self.colors)} entries for a graph with {g.m} edges"
            )
        for e, c in enumerate(self.colors):
            if not (1 <= c <= self.k):
                raise MalformedColoringError(f"edge {e} has color {c} outside 1..{self.k}")

    def permuted(self, sigma: dict[int, int]) -> "EdgeColoring":
        return EdgeColoring(self.k, tuple(sigma[c] for c in self.colors))


def palette(g: CubicGraph, c: EdgeColoring, v: int) -> frozenset[int]:
    """S_c(v): the set of colors on the edges incident to v."""
    return frozenset(c.colors[e] for e in g.incidence[v])


@dataclass(frozen=True)
class ProperReport:
    ok: bool
    violation: tuple[int, int, int] | None = None  # (vertex, edge, edge)

    def __bool__(self) -> bool:
        return self.ok


def verify_proper(g: CubicGraph, c: EdgeColoring) -> ProperReport:
    """First-violation properness check: no vertex sees a repeated color."""
    c.check_against(g)
    for v in range(g.n):
        inc = g.incidence[v]
        for i in range(len(inc)):
            for j in range(i + 1, len(inc)):
                if c.colors[inc[i]] == c.colors[inc[j]]:
                    return ProperReport(False, (v, inc[i], inc[j]))
    return ProperReport(True)


def classify_edge(g: CubicGraph, c: EdgeColoring, e: int) -> EdgeClass:
    """Poor/rich/abnormal classification; both endpoints must have degree 3."""
    rep = verify_proper(g, c)
    if not rep.ok:
        raise ImproperColoringError(f"coloring improper at vertex {rep.violation[0]}")
    u, v = g.endpoints(e)
    if g.degree(u) != 3 or g.degree(v) != 3:
        raise NonCubicError("edge classification needs two degree-3 endpoints")
    return _classify(g, c.colors, e)


def _classify(g: CubicGraph, colors, e: int) -> EdgeClass:
    u, v = g.endpoints(e)
    union = {colors[f] for f in g.incidence[u]}
    union.update(colors[f] for f in g.incidence[v])
    size = len(union)
    if size == 3:
        return EdgeClass.POOR
    if size == 5:
        return EdgeClass.RICH
    return EdgeClass.ABNORMAL


@dataclass(frozen=True)
class NormalReport:
    ok: bool
    abnormal_edges: tuple[int, ...] = ()
    improper_at: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_normal(g: CubicGraph, c: EdgeColoring) -> NormalReport:
    """Every edge poor or rich. An improper coloring fails with the violation site."""
    if not g.is_cubic:
        raise NonCubicError("normality is defined for cubic graphs")
    rep = verify_proper(g, c)
    if not rep.ok:
        return NormalReport(False, (), rep.violation)
    abnormal = tuple(
        e for e in range(g.m) if _classify(g, c.colors, e) is EdgeClass.ABNORMAL
    )
    return NormalReport(len(abnormal) == 0, abnormal, None)


@dataclass(frozen=True)
class NormalSearchResult:
    status: SearchStatus
    coloring: EdgeColoring | None
    nodes: int

    def __bool__(self) -> bool:
        return self.status is SearchStatus.SAT


def find_normal_coloring(
    g: CubicGraph, k: int, budget: int = DEFAULT_BUDGET
) -> NormalSearchResult:
    """Exact backtracking search for a normal k-edge-coloring.

    Deterministic: edges in BFS order from vertex 0, colors tried ascending,
    first edge pinned to color 1 and the next edge sharing its endpoint to
    color 2 (lossless by color-permutation closure). Prunes on properness
    immediately and on poor/rich feasibility as soon as an endpoint's star is
    fully colored. A SAT answer is re-verified before it is returned.
    """
    if not g.is_cubic:
        raise NonCubicError("normal-coloring search requires a cubic graph")
    if k < 1:
        raise ValueError("k must be >= 1")
    order = bfs_edge_order(g)
    colors = [0] * g.m
    remaining = [3] * g.n  # uncolored edges at each vertex
    nodes = 0

    def endpoint_ok(e: int) -> bool:
        """Poor/rich still reachable for every edge touching e's endpoints."""
        u, v = g.endpoints(e)
        affected = set(g.incidence[u]) | set(g.incidence[v])
        for f in affected:
            a, b = g.endpoints(f)
            if colors[f] == 0:
                continue
            full_a = remaining[a] == 0
            full_b = remaining[b] == 0
            if not (full_a or full_b):
                continue
            union = {colors[x] for x in g.incidence[a] if colors[x]}
            union.update(colors[x] for x in g.incidence[b] if colors[x])
            lo = len(union)
            if full_a and full_b:
                if lo == 4:
                    return False
                continue
            # one side complete: the union can only grow, never shrink
            free = remaining[b] if full_a else remaining[a]
            hi = min(5, k, lo + free)
            if not (lo <= 3 <= hi or lo <= 5 <= hi):
                return False
        return True

    def solve(pos: int) -> SearchStatus:
        nonlocal nodes
        if pos == g.m:
            return SearchStatus.SAT
        e = order[pos]
        u, v = g.endpoints(e)
        if pos == 0:
            choices = (1,)
        elif pos == 1:
            choices = (2,) if k >= 2 else ()
        else:
            choices = range(1, k + 1)
        used = {colors[f] for f in g.incidence[u] if colors[f]}
        used.update(colors[f] for f in g.incidence[v] if colors[f])
        for c in choices:
            if c in used:
                continue
            nodes += 1
            if nodes > budget:
                return SearchStatus.BUDGET_EXCEEDED
            colors[e] = c
            remaining[u] -= 1
            remaining[v] -= 1
            if endpoint_ok(e):
                sub = solve(pos + 1)
                if sub is not SearchStatus.UNSAT:
                    if sub is SearchStatus.SAT:
                        return sub
                    colors[e] = 0
                    remaining[u] += 1
                    remaining[v] += 1
                    return sub
            colors[e] = 0
            remaining[u] += 1
            remaining[v] += 1
        return SearchStatus.UNSAT

    status = solve(0)
    if status is SearchStatus.SAT:
        coloring = EdgeColoring(k, tuple(colors))
        if not verify_proper(g, coloring).ok or not verify_normal(g, coloring).ok:
            raise AssertionError("search produced a coloring that fails verification")
        return NormalSearchResult(SearchStatus.SAT, coloring, nodes)
    return NormalSearchResult(status, None, nodes)


@dataclass(frozen=True)
class ChromaticIndexResult:
    index: int | None  # smallest k with a normal k-edge-coloring, None if none <= kmax
    kmax: int
    witness: EdgeColoring | None
    budget_hit_at: int | None  # k whose search ran out of budget, if any
    nodes: int


def normal_chromatic_index(
    g: CubicGraph, kmax: int, budget: int = DEFAULT_BUDGET
) -> ChromaticIndexResult:
    """Smallest k <= kmax admitting a normal k-edge-coloring, by iterated search."""
    total = 0
    for k in range(3, kmax + 1):
        res = find_normal_coloring(g, k, budget)
        total += res.nodes
        if res.status is SearchStatus.BUDGET_EXCEEDED:
            return ChromaticIndexResult(None, kmax, None, k, total)
        if res.status is SearchStatus.SAT:
            return ChromaticIndexResult(k, kmax, res.coloring, None, total)
    return ChromaticIndexResult(None, kmax, None, None, total)
