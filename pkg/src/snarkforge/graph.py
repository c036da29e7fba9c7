"""Immutable graph substrate and the structural oracles used to certify snarks.

Vertices are 0..n-1. Edges are stored once as (min, max) pairs in ascending
lexicographic order; the edge *index* into that list is the identity used by
every coloring and certificate in the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import (
    GraphError,
    NonCubicError,
    NotIsomorphicError,
    UnsupportedScaleError,
)

PORT_NAMES = ("LB", "LT", "RB", "RT", "UP")


class CubicGraph:
    """Simple undirected graph with maximum degree 3.

    A graph is *cubic* when every degree equals 3 and *ported* when some
    vertices have degree 1 or 2 (block fragments during assembly). The edge
    list is always sorted, so edge indices are a deterministic function of
    the vertex labeling alone.
    """

    __slots__ = ("n", "edges", "incidence", "_index_of")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        pairs = []
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            pairs.append((u, v) if u < v else (v, u))
        pairs.sort()
        for a, b in zip(pairs, pairs[1:]):
            if a == b:
                raise GraphError(f"parallel edge {a}")
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(pairs)
        inc: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        for lst in inc:
            if len(lst) > 3:
                raise GraphError("vertex degree exceeds 3")
        self.incidence: tuple[tuple[int, ...], ...] = tuple(tuple(lst) for lst in inc)
        self._index_of = {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    @property
    def is_cubic(self) -> bool:
        return self.n > 0 and all(len(inc) == 3 for inc in self.incidence)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(inc) for inc in self.incidence))

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.edges[e]

    def other_end(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        return w if v == u else u

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(self.other_end(e, v) for e in self.incidence[v])

    def edge_index(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self._index_of[key]
        except KeyError:
            raise GraphError(f"no edge {key}") from None

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._index_of

    def relabeled(self, perm: Sequence[int]) -> "CubicGraph":
        """Image under the vertex permutation v -> perm[v]."""
        return CubicGraph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CubicGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"CubicGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class PortedBlock:
    """A graph fragment with named degree-deficient attachment vertices.

    Ports: LB/LT left bottom/top, RB/RT right bottom/top, UP the chain's
    degree-2 vertex that later absorbs a connector edge.
    """

    graph: CubicGraph
    lb: int
    lt: int
    rb: int
    rt: int
    up: int

    def __post_init__(self):
        ports = self.ports()
        if len(set(ports.values())) != len(ports):
            raise GraphError("port vertices must be distinct")
        for name, v in ports.items():
            if not (0 <= v < self.graph.n):
                raise GraphError(f"port {name}={v} out of range")

    def ports(self) -> dict[str, int]:
        return {"LB": self.lb, "LT": self.lt, "RB": self.rb, "RT": self.rt, "UP": self.up}


# ---------------------------------------------------------------------------
# Structural oracles
# ---------------------------------------------------------------------------


def girth(g: CubicGraph) -> float:
    """Length of a shortest cycle, or math.inf when the graph is acyclic.

    BFS from every vertex; the minimum over all roots of the first
    non-tree-edge closure is the exact girth.
    """
    best = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        dist[root] = 0
        via = [-1] * g.n  # edge used to reach the vertex
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if 2 * dist[u] + 1 >= best:
                continue
            for e in g.incidence[u]:
                if e == via[u]:
                    continue
                w = g.other_end(e, u)
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    via[w] = e
                    queue.append(w)
                else:
                    cycle = dist[u] + dist[w] + 1
                    if cycle < best:
                        best = cycle
    return best


def connected_components(g: CubicGraph, removed_edges: frozenset[int] = frozenset()) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        head = 0
        while head < len(comp):
            u = comp[head]
            head += 1
            for e in g.incidence[u]:
                if e in removed_edges:
                    continue
                w = g.other_end(e, u)
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
        comps.append(comp)
    return comps


def is_connected(g: CubicGraph) -> bool:
    return g.n == 0 or len(connected_components(g)) == 1


def _bridges_without(g: CubicGraph, removed: frozenset[int]) -> list[int]:
    """Bridges of the graph after deleting the given edges. Iterative Tarjan."""
    disc = [-1] * g.n
    low = [0] * g.n
    bridges = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(g.incidence[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, via, it = stack[-1]
            advanced = False
            for e in it:
                if e == via or e in removed:
                    continue
                w = g.other_end(e, u)
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, e, iter(g.incidence[w])))
                    advanced = True
                    break
                low[u] = min(low[u], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    parent, pedge, _ = stack[-1]
                    low[parent] = min(low[parent], low[u])
                    if low[u] > disc[parent]:
                        bridges.append(via)
        # root handled implicitly
    return bridges


def _has_cyclic_split(g: CubicGraph, cut: frozenset[int]) -> bool:
    """True when removing the cut leaves >= 2 components that each contain a cycle."""
    cyclic = 0
    for comp in connected_components(g, cut):
        if len(comp) == g.n and not cut:
            return False
        members = set(comp)
        edges_inside = 0
        for v in comp:
            for e in g.incidence[v]:
                if e in cut:
                    continue
                if g.other_end(e, v) in members:
                    edges_inside += 1
        edges_inside //= 2
        if edges_inside >= len(comp):
            cyclic += 1
            if cyclic >= 2:
                return True
    return False


def is_cyclically_edge_connected(g: CubicGraph, t: int) -> bool:
    """True iff no edge cut of size < t separates two parts that each contain a cycle.

    Exhaustive over all candidate cuts of size 1..t-1. Every violating edge
    subset contains the coboundary of a connected cyclic part, and every such
    coboundary of size <= 3 shows up as (subset of size s-1) + (a bridge of the
    graph minus that subset), which is what the sweep enumerates.
    """
    if t < 1:
        raise ValueError("threshold must be >= 1")
    if t > 4:
        raise UnsupportedScaleError("cyclic edge connectivity supported only for t <= 4")
    if not g.is_cubic:
        raise NonCubicError("cyclic edge connectivity oracle requires a cubic graph")
    if not is_connected(g):
        raise GraphError("cyclic edge connectivity oracle requires a connected graph")

    candidates: set[frozenset[int]] = set()
    for b in _bridges_without(g, frozenset()):
        candidates.add(frozenset((b,)))
    if t >= 3:
        for e in range(g.m):
            base = frozenset((e,))
            for b in _bridges_without(g, base):
                candidates.add(base | {b})
    if t >= 4:
        for e1, e2 in combinations(range(g.m), 2):
            base = frozenset((e1, e2))
            for b in _bridges_without(g, base):
                candidates.add(base | {b})
    for cut in candidates:
        if len(cut) < t and _has_cyclic_split(g, cut):
            return False
    return True


# ---------------------------------------------------------------------------
# 3-edge-colorability
# ---------------------------------------------------------------------------


def bfs_edge_order(g: CubicGraph) -> list[int]:
    """Edges ordered by a breadth-first sweep of the vertices from vertex 0."""
    order = []
    placed = [False] * g.m
    seen = [False] * g.n
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = [start]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for e in g.incidence[u]:
                if not placed[e]:
                    placed[e] = True
                    order.append(e)
                w = g.other_end(e, u)
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def is_3_edge_colorable(g: CubicGraph) -> tuple[bool, tuple[int, ...] | None]:
    """Exhaustive backtracking; returns (True, witness colors 1..3) or (False, None)."""
    if not g.is_cubic:
        raise NonCubicError("3-edge-colorability is defined here for cubic graphs only")
    order = bfs_edge_order(g)
    colors = [0] * g.m
    ends = g.edges

    def feasible(e: int, c: int) -> bool:
        u, v = ends[e]
        for f in g.incidence[u]:
            if colors[f] == c:
                return False
        for f in g.incidence[v]:
            if colors[f] == c:
                return False
        return True

    def solve(pos: int) -> bool:
        if pos == len(order):
            return True
        e = order[pos]
        # first two edges (both incident to the BFS root) break color symmetry
        if pos == 0:
            choices: Sequence[int] = (1,)
        elif pos == 1:
            choices = (2,)
        else:
            choices = (1, 2, 3)
        for c in choices:
            if feasible(e, c):
                colors[e] = c
                if solve(pos + 1):
                    return True
                colors[e] = 0
        return False

    if solve(0):
        return True, tuple(colors)
    return False, None


@dataclass(frozen=True)
class SnarkReport:
    ok: bool
    failed_check: str | None  # first failing test, in the fixed order
    girth: float
    cyclically_4_connected: bool | None
    three_edge_colorable: bool | None

    def __bool__(self) -> bool:
        return self.ok


def is_snark(g: CubicGraph) -> SnarkReport:
    """Girth >= 5, cyclically 4-edge-connected, and not 3-edge-colorable.

    All three checks run regardless of earlier failures so the report carries
    the full picture; failed_check names the first failure in the order above.
    """
    if not g.is_cubic:
        raise NonCubicError("snark test requires a cubic graph")
    gir = girth(g)
    cyc = is_cyclically_edge_connected(g, 4)
    colorable, _ = is_3_edge_colorable(g)
    if gir < 5:
        failed = "girth"
    elif not cyc:
        failed = "cyclic-4-edge-connectivity"
    elif colorable:
        failed = "3-edge-colorable"
    else:
        failed = None
    return SnarkReport(failed is None, failed, gir, cyc, colorable)


# ---------------------------------------------------------------------------
# Canonical form / isomorphism
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """Label-invariant canonical relabeling: equal forms iff isomorphic inputs."""

    order: tuple[int, ...]  # order[i] = original vertex placed at canonical label i
    edges: tuple[tuple[int, int], ...]

    def labeling(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}


def _refine(g: CubicGraph, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbor counts per cell until stable."""
    while True:
        cell_of = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = ci
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig: dict[int, tuple[int, ...]] = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in g.neighbors(v):
                    counts[cell_of[w]] += 1
                sig[v] = tuple(counts)
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            if len(groups) > 1:
                changed = True
            for key in sorted(groups):
                new_cells.append(sorted(groups[key]))
        cells = new_cells
        if not changed:
            return cells


def canonical_form(g: CubicGraph) -> CanonicalForm:
    """Canonical vertex ordering via individualization-refinement backtracking.

    Branches over every vertex of the first smallest non-singleton cell and
    keeps the lexicographically smallest relabeled edge list; ties in the
    search are broken by ascending vertex index.
    """
    if g.n == 0:
        return CanonicalForm((), ())
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(g.degree(v), []).append(v)
    initial = [sorted(by_degree[d]) for d in sorted(by_degree)]

    best: list[tuple[tuple[int, ...], tuple[tuple[int, int], ...]]] = []

    def certificate(order: list[int]) -> tuple[tuple[int, int], ...]:
        label = {v: i for i, v in enumerate(order)}
        return tuple(sorted(tuple(sorted((label[u], label[v]))) for u, v in g.edges))

    def descend(cells: list[list[int]]) -> None:
        cells = _refine(g, cells)
        target = None
        size = None
        for ci, cell in enumerate(cells):
            if len(cell) > 1 and (size is None or len(cell) < size):
                target = ci
                size = len(cell)
        if target is None:
            order = [cell[0] for cell in cells]
            cert = certificate(order)
            if not best or cert < best[0][1]:
                best.clear()
                best.append((tuple(order), cert))
            return
        for v in cells[target]:
            branched = (
                cells[:target]
                + [[v], [w for w in cells[target] if w != v]]
                + cells[target + 1 :]
            )
            descend(branched)

    descend(initial)
    order, cert = best[0]
    return CanonicalForm(order, cert)


def are_isomorphic(g1: CubicGraph, g2: CubicGraph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    return canonical_form(g1).edges == canonical_form(g2).edges


def find_isomorphism(g1: CubicGraph, g2: CubicGraph) -> list[int]:
    """An explicit isomorphism g1 -> g2 (vertex map), via the canonical forms."""
    cf1 = canonical_form(g1)
    cf2 = canonical_form(g2)
    if cf1.edges != cf2.edges or g1.n != g2.n:
        raise NotIsomorphicError("graphs are not isomorphic")
    label1 = cf1.labeling()
    iso = [0] * g1.n
    for v in range(g1.n):
        iso[v] = cf2.order[label1[v]]
    return iso


def disjoint_union(gs: Sequence[CubicGraph]) -> tuple[CubicGraph, tuple[int, ...]]:
    """Blockwise disjoint union; returns the union and per-part vertex offsets."""
    offsets = []
    total = 0
    edges: list[tuple[int, int]] = []
    for g in gs:
        offsets.append(total)
        edges.extend((u + total, v + total) for u, v in g.edges)
        total += g.n
    return CubicGraph(total, edges), tuple(offsets)
