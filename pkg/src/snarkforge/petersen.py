"""Petersen-graph machinery: perfect matchings, edge-set homomorphisms, and
Berge-Fulkerson coverings.

A P10-coloring of a cubic graph G maps each edge of G to an edge of the
Petersen graph so that every vertex star of G lands exactly onto some vertex
star of P10. Pulling a fixed normal 5-edge-coloring of P10 back through such a
map yields a normal 5-edge-coloring of G; pulling back the six perfect
matchings yields a Berge-Fulkerson covering (six perfect matchings covering
every edge exactly twice).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

from .coloring import DEFAULT_BUDGET, EdgeColoring, SearchStatus, verify_normal
from .errors import GraphError, NonCubicError, VerificationError
from .graph import CubicGraph, bfs_edge_order

logger = logging.getLogger(__name__)


def petersen_graph() -> CubicGraph:
    """The Petersen graph on the fixed labeling all certificates refer to.

    Outer 5-cycle 0..4, spokes i--i+5, inner pentagram (i+5)--((i+2) mod 5)+5.
    """
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((i + 5, (i + 2) % 5 + 5))
    return CubicGraph(10, edges)


# Normal 5-edge-coloring of petersen_graph(), frozen from the deterministic
# search (find_normal_coloring(petersen_graph(), 5)); pinned by a regression
# test so pullbacks and hint pruning stay stable across builds.
REFERENCE_P10_COLORING = EdgeColoring(
    5, (1, 2, 3, 4, 5, 3, 2, 5, 1, 4, 5, 4, 2, 3, 1)
)


def enumerate_perfect_matchings(g: CubicGraph) -> list[tuple[int, ...]]:
    """All perfect matchings, each a sorted edge-index tuple, list sorted."""
    if g.n % 2 == 1:
        raise GraphError("no perfect matching: odd vertex count")
    if not g.is_cubic:
        raise NonCubicError("perfect-matching enumeration expects a cubic graph")
    matchings: list[tuple[int, ...]] = []
    covered = [False] * g.n

    def extend(chosen: list[int]) -> None:
        v = next((x for x in range(g.n) if not covered[x]), None)
        if v is None:
            matchings.append(tuple(sorted(chosen)))
            return
        for e in g.incidence[v]:
            w = g.other_end(e, v)
            if not covered[w]:
                covered[v] = covered[w] = True
                chosen.append(e)
                extend(chosen)
                chosen.pop()
                covered[v] = covered[w] = False

    extend([])
    matchings.sort()
    return matchings


@lru_cache(maxsize=1)
def petersen_matchings() -> tuple[tuple[int, ...], ...]:
    return tuple(enumerate_perfect_matchings(petersen_graph()))


@dataclass(frozen=True)
class PetersenColoring:
    """Map edge-of-G -> edge-of-P10, indexed against petersen_graph()."""

    phi: tuple[int, ...]


@dataclass(frozen=True)
class PetersenReport:
    ok: bool
    failing_vertex: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@lru_cache(maxsize=1)
def _p10_stars() -> tuple[frozenset[int], ...]:
    p10 = petersen_graph()
    return tuple(frozenset(p10.incidence[w]) for w in range(10))


def verify_petersen_coloring(g: CubicGraph, pc: PetersenColoring) -> PetersenReport:
    """Check that every vertex star of g maps exactly onto some P10 vertex star."""
    if not g.is_cubic:
        raise NonCubicError("P10-coloring verification expects a cubic graph")
    if len(pc.phi) != g.m:
        raise VerificationError(
            f"map has {len(pc.phi)} entries for a graph with {g.m} edges"
        )
    for e, img in enumerate(pc.phi):
        if not (0 <= img < 15):
            raise VerificationError(f"edge {e} maps to {img}, not a P10 edge index")
    stars = set(_p10_stars())
    for v in range(g.n):
        image = frozenset(pc.phi[e] for e in g.incidence[v])
        if len(image) != 3:
            return PetersenReport(False, v, "incident edges map to fewer than 3 edges")
        if image not in stars:
            return PetersenReport(False, v, "image is not a vertex star of P10")
    return PetersenReport(True)


@dataclass(frozen=True)
class PetersenSearchResult:
    status: SearchStatus
    coloring: PetersenColoring | None
    nodes: int
    fallback_used: bool = False

    def __bool__(self) -> bool:
        return self.status is SearchStatus.SAT


@lru_cache(maxsize=1)
def _adjacent_pairs() -> frozenset[tuple[int, int]]:
    """Pairs of distinct P10 edges that lie in a common vertex star."""
    pairs = set()
    for star in _p10_stars():
        lst = sorted(star)
        for i in range(3):
            for j in range(i + 1, 3):
                pairs.add((lst[i], lst[j]))
    return frozenset(pairs)


def _search_phi(g: CubicGraph, domains: list[tuple[int, ...]], budget: int):
    order = bfs_edge_order(g)
    stars = frozenset(_p10_stars())
    pairs = _adjacent_pairs()
    phi = [-1] * g.m
    assigned = [0] * g.n
    nodes = 0

    def vertex_ok(v: int) -> bool:
        images = [phi[e] for e in g.incidence[v] if phi[e] >= 0]
        if len(images) <= 1:
            return True
        if len(images) == 2:
            a, b = images
            if a == b:
                return False
            return (a, b) in pairs if a < b else ((b, a) in pairs)
        image = frozenset(images)
        return len(image) == 3 and image in stars

    def solve(pos: int) -> SearchStatus:
        nonlocal nodes
        if pos == g.m:
            return SearchStatus.SAT
        e = order[pos]
        u, v = g.endpoints(e)
        for img in domains[e]:
            nodes += 1
            if nodes > budget:
                return SearchStatus.BUDGET_EXCEEDED
            phi[e] = img
            assigned[u] += 1
            assigned[v] += 1
            if vertex_ok(u) and vertex_ok(v):
                sub = solve(pos + 1)
                if sub is SearchStatus.SAT:
                    return sub
                if sub is SearchStatus.BUDGET_EXCEEDED:
                    phi[e] = -1
                    assigned[u] -= 1
                    assigned[v] -= 1
                    return sub
            phi[e] = -1
            assigned[u] -= 1
            assigned[v] -= 1
        return SearchStatus.UNSAT

    status = solve(0)
    return status, (tuple(phi) if status is SearchStatus.SAT else None), nodes


def find_petersen_coloring(
    g: CubicGraph,
    hint: EdgeColoring | None = None,
    budget: int = DEFAULT_BUDGET,
) -> PetersenSearchResult:
    """Backtracking search for a P10-coloring of g.

    With a normal 5-edge-coloring of g as a hint, the candidates for each edge
    are restricted to the P10 edges whose color under the frozen reference
    coloring equals the hinted color. If that restricted search comes back
    UNSAT the searcher logs the event and falls back to the unrestricted one.
    """
    if not g.is_cubic:
        raise NonCubicError("P10-coloring search expects a cubic graph")
    full_domain = tuple(range(15))
    nodes_total = 0
    if hint is not None:
        hint.check_against(g)
        if hint.k != 5:
            raise VerificationError("hint must be a 5-edge-coloring")
        classes: dict[int, list[int]] = {c: [] for c in range(1, 6)}
        for p10_edge, c in enumerate(REFERENCE_P10_COLORING.colors):
            classes[c].append(p10_edge)
        domains = [tuple(classes[hint.colors[e]]) for e in range(g.m)]
        status, phi, nodes = _search_phi(g, domains, budget)
        nodes_total += nodes
        if status is SearchStatus.SAT:
            return PetersenSearchResult(status, PetersenColoring(phi), nodes_total)
        if status is SearchStatus.BUDGET_EXCEEDED:
            return PetersenSearchResult(status, None, nodes_total)
        logger.warning(
            "hint-restricted P10-coloring search was UNSAT; retrying unrestricted"
        )
        status, phi, nodes = _search_phi(g, [full_domain] * g.m, budget - nodes_total)
        nodes_total += nodes
        result = PetersenSearchResult(
            status,
            PetersenColoring(phi) if phi is not None else None,
            nodes_total,
            fallback_used=True,
        )
        return result
    status, phi, nodes = _search_phi(g, [full_domain] * g.m, budget)
    return PetersenSearchResult(
        status, PetersenColoring(phi) if phi is not None else None, nodes
    )


def pullback_normal_coloring(g: CubicGraph, pc: PetersenColoring) -> EdgeColoring:
    """Compose a verified P10-coloring with the frozen reference coloring of P10."""
    rep = verify_petersen_coloring(g, pc)
    if not rep.ok:
        raise VerificationError(
            f"map fails the star condition at vertex {rep.failing_vertex}"
        )
    colors = tuple(REFERENCE_P10_COLORING.colors[img] for img in pc.phi)
    result = EdgeColoring(5, colors)
    if not verify_normal(g, result).ok:
        raise AssertionError("pullback of the reference coloring is not normal")
    return result


@dataclass(frozen=True)
class BFCovering:
    """Six perfect matchings meant to cover every edge exactly twice."""

    matchings: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.matchings) != 6:
            raise VerificationError("a Berge-Fulkerson covering has exactly 6 matchings")


@dataclass(frozen=True)
class BFReport:
    ok: bool
    violations: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def verify_bf_covering(g: CubicGraph, bf: BFCovering) -> BFReport:
    """Each set a perfect matching, every edge covered exactly twice."""
    violations = []
    for i, matching in enumerate(bf.matchings):
        covered: set[int] = set()
        ok = True
        for e in matching:
            if not (0 <= e < g.m):
                violations.append(f"matching {i}: edge index {e} out of range")
                ok = False
                continue
            u, v = g.endpoints(e)
            if u in covered or v in covered:
                violations.append(f"matching {i}: vertex covered twice by edge {e}")
                ok = False
            covered.add(u)
            covered.add(v)
        if ok and len(covered) != g.n:
            missing = next(x for x in range(g.n) if x not in covered)
            violations.append(f"matching {i}: vertex {missing} not covered")
    counts = [0] * g.m
    for matching in bf.matchings:
        for e in matching:
            if 0 <= e < g.m:
                counts[e] += 1
    for e, cnt in enumerate(counts):
        if cnt != 2:
            violations.append(f"edge {e} covered {cnt} times, expected 2")
    return BFReport(not violations, tuple(violations))


def extract_bf_covering(g: CubicGraph, pc: PetersenColoring) -> BFCovering:
    """Preimages of the six perfect matchings of P10 under a verified map."""
    rep = verify_petersen_coloring(g, pc)
    if not rep.ok:
        raise VerificationError(
            f"map fails the star condition at vertex {rep.failing_vertex}"
        )
    matchings = []
    for pm in petersen_matchings():
        members = frozenset(pm)
        matchings.append(tuple(e for e in range(g.m) if pc.phi[e] in members))
    bf = BFCovering(tuple(matchings))
    report = verify_bf_covering(g, bf)
    if not report.ok:
        raise AssertionError(f"extracted covering failed verification: {report.violations}")
    return bf
