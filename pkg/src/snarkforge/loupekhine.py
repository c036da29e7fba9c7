"""Constructors for the chained-block snark families.

A building block is the 7-vertex fragment left after deleting the three
vertices of a 2-path from the Petersen graph: two degree-3 vertices (v, w) and
five degree-2 vertices, wired

    v--j, j--k, k--w, w--y, y--v, v--z, z--x, x--w

with ports LB=j, LT=x, RB=k, RT=z, UP=y. Chaining k such blocks cyclically
(right ports of block i to left ports of block i+1) leaves the k UP vertices
w_1..w_k at degree 2; a connector graph with degree-1 vertices z_1..z_k made
of single edges (K2) and 3-leaf stars is glued on by identifying w_i with z_i,
giving a cubic graph. A *twist* crosses one joint: RB_i--LT_{i+1} and
RT_i--LB_{i+1} instead of the parallel wiring.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GraphError, SpecError
from .graph import CubicGraph, PortedBlock, girth, is_snark

# Local vertex labels of the block, fixed for the whole package.
LOCAL_VERTEX = {"v": 0, "w": 1, "j": 2, "k": 3, "x": 4, "z": 5, "y": 6}

# The 8 in-block edges by name, as local vertex pairs.
BLOCK_EDGE_NAMES = ("vj", "jk", "kw", "wy", "yv", "vz", "zx", "xw")
BLOCK_EDGES = {
    "vj": (0, 2),
    "jk": (2, 3),
    "kw": (1, 3),
    "wy": (1, 6),
    "yv": (0, 6),
    "vz": (0, 5),
    "zx": (4, 5),
    "xw": (1, 4),
}


def bp_block() -> PortedBlock:
    """The fixed Petersen building block: 7 vertices, 8 edges, five of degree 2."""
    g = CubicGraph(7, list(BLOCK_EDGES.values()))
    block = PortedBlock(
        g,
        lb=LOCAL_VERTEX["j"],
        lt=LOCAL_VERTEX["x"],
        rb=LOCAL_VERTEX["k"],
        rt=LOCAL_VERTEX["z"],
        up=LOCAL_VERTEX["y"],
    )
    return block


def block_removal(g: CubicGraph, path: tuple[int, int, int]) -> PortedBlock:
    """Induced subgraph after deleting the three vertices of a 2-path of a snark.

    Girth >= 5 forces the result to have exactly five degree-2 vertices. Ports
    are named from the deleted path: the two ex-neighbors of the first path
    vertex become LB/LT (ascending), the two ex-neighbors of the last become
    RB/RT (ascending), and the ex-neighbor of the middle vertex becomes UP.
    """
    u, v, w = path
    if len({u, v, w}) != 3 or not (g.has_edge(u, v) and g.has_edge(v, w)):
        raise GraphError(f"({u},{v},{w}) is not a path of length 2")
    report = is_snark(g)
    if not report.ok:
        raise GraphError(f"block removal requires a snark (failed: {report.failed_check})")
    removed = {u, v, w}
    keep = [x for x in range(g.n) if x not in removed]
    relabel = {old: new for new, old in enumerate(keep)}
    edges = [
        (relabel[a], relabel[b])
        for a, b in g.edges
        if a not in removed and b not in removed
    ]
    sub = CubicGraph(len(keep), edges)
    degs = sub.degree_sequence()
    if degs.count(2) != 5 or degs.count(3) != len(keep) - 5:
        raise AssertionError(
            "degree profile after 2-path removal is not (five 2s, rest 3s); "
            "this contradicts girth >= 5"
        )
    left = sorted(relabel[x] for x in g.neighbors(u) if x not in removed)
    right = sorted(relabel[x] for x in g.neighbors(w) if x not in removed)
    middle = [relabel[x] for x in g.neighbors(v) if x not in removed]
    if len(left) != 2 or len(right) != 2 or len(middle) != 1:
        raise AssertionError("unexpected neighbor profile for a 2-path in a snark")
    return PortedBlock(sub, lb=left[0], lt=left[1], rb=right[0], rt=right[1], up=middle[0])


# ---------------------------------------------------------------------------
# LP specs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class K2:
    """Connector component: one edge joining leaves a and b."""

    a: int
    b: int

    def blocks(self) -> tuple[int, ...]:
        return (self.a, self.b)


@dataclass(frozen=True)
class Star:
    """Connector component: a fresh center joined to leaves a, b, c."""

    a: int
    b: int
    c: int

    def blocks(self) -> tuple[int, ...]:
        return (self.a, self.b, self.c)


Component = K2 | Star


@dataclass(frozen=True)
class LPSpec:
    """Full recipe for a chained-block snark.

    k blocks, a set of twisted joints (joint i sits between blocks i and
    i+1, cyclically), connector components over block indices 1..k, and an
    optional odd partition (r, s, t) of the chain into three contiguous
    segments. The partition is read in rotated order: position p hosts block
    ((rotation + p - 1) mod k) + 1, so a rotation lets the segments start
    anywhere on the cycle while staying contiguous.
    """

    k: int
    twists: frozenset[int] = frozenset()
    connector: tuple[Component, ...] = ()
    partition: tuple[int, int, int] | None = None
    rotation: int = 0

    def __post_init__(self):
        if self.k < 3 or self.k % 2 == 0:
            raise SpecError(f"k must be an odd integer >= 3, got {self.k}")
        for i in self.twists:
            if not (1 <= i <= self.k):
                raise SpecError(f"twist position {i} outside 1..{self.k}")
        seen: list[int] = []
        for comp in self.connector:
            seen.extend(comp.blocks())
        if sorted(seen) != list(range(1, self.k + 1)):
            raise SpecError(
                "connector components must use each block index in 1..k exactly once"
            )
        if self.partition is not None:
            r, s, t = self.partition
            if r + s + t != self.k:
                raise SpecError("partition must sum to k")
            if min(r, s, t) < 1 or r % 2 == 0 or s % 2 == 0 or t % 2 == 0:
                raise SpecError("partition parts must be odd and positive")
        if not (0 <= self.rotation < self.k):
            raise SpecError(f"rotation must lie in 0..{self.k - 1}")

    def block_at(self, position: int) -> int:
        """Block index hosted at chain position 1..k under the rotation."""
        return (self.rotation + position - 1) % self.k + 1

    def position_of(self, block: int) -> int:
        return (block - 1 - self.rotation) % self.k + 1

    def segment_of(self, block: int) -> int:
        """Segment 1..3 containing the block; requires a partition."""
        if self.partition is None:
            raise SpecError("spec has no partition")
        r, s, _ = self.partition
        p = self.position_of(block)
        if p <= r:
            return 1
        if p <= r + s:
            return 2
        return 3

    def num_stars(self) -> int:
        return sum(1 for comp in self.connector if isinstance(comp, Star))


@dataclass(frozen=True)
class Compatibility:
    """Whether the table-driven coloring applies to a spec's partition."""

    k2_ok: bool
    star_ok: bool
    detail: str | None = None

    @property
    def ok(self) -> bool:
        return self.k2_ok and self.star_ok


def check_compatibility(spec: LPSpec) -> Compatibility:
    """K2 leaves must share a segment; each star's leaves must hit all three.

    The first rule is the hypothesis of the table-driven construction; the
    second is forced by the connector color rule (a star center with two
    same-colored edges would be improper).
    """
    for comp in spec.connector:
        if isinstance(comp, K2):
            sa, sb = spec.segment_of(comp.a), spec.segment_of(comp.b)
            if sa != sb:
                return Compatibility(
                    False, True, f"K2({comp.a},{comp.b}) spans segments {sa} and {sb}"
                )
    for comp in spec.connector:
        if isinstance(comp, Star):
            segs = {spec.segment_of(x) for x in comp.blocks()}
            if len(segs) != 3:
                return Compatibility(
                    True,
                    False,
                    f"Star{comp.blocks()} leaves lie in segments {sorted(segs)}",
                )
    return Compatibility(True, True)


def mansha_spec(k: int) -> LPSpec:
    """The one-star family: star at blocks (1, h+1, h+2) with h = k // 2 and
    K2s pairing blocks (i+2, k-i); first segment is the length-(k-2) cyclic
    run starting at block h+3, then the two singleton segments {h+1}, {h+2}.
    """
    if k % 2 == 0 or k < 5:
        raise SpecError("the one-star family needs odd k >= 5")
    h = k // 2
    components: list[Component] = [Star(1, h + 1, h + 2)]
    for i in range(h - 1):
        components.append(K2(i + 2, k - i))
    return LPSpec(
        k=k,
        twists=frozenset(),
        connector=tuple(components),
        partition=(k - 2, 1, 1),
        rotation=h + 2,
    )


# ---------------------------------------------------------------------------
# Assembly
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AssemblyMap:
    """Bookkeeping from spec coordinates to global vertex/edge indices.

    Provenance maps every global edge index to exactly one source:
    ("block", i, name), ("joint", i, "bottom"|"top"), or ("connector", ci, leaf)
    with leaf=0 for a K2's single edge.
    """

    graph: CubicGraph
    offsets: tuple[int, ...]
    ports: tuple[dict[str, int], ...]  # per block (1-based index i -> ports[i-1])
    w: tuple[int, ...]  # global UP vertex of each block
    star_centers: dict[int, int]  # connector component index -> center vertex
    provenance: dict[int, tuple] = field(repr=False)

    def block_edge(self, block: int, name: str) -> int:
        a, b = BLOCK_EDGES[name]
        off = self.offsets[block - 1]
        return self.graph.edge_index(off + a, off + b)

    def joint_edge(self, joint: int, side: str) -> int:
        """Joint i joins blocks i and i+1; side "bottom" leaves from RB, "top" from RT."""
        port = "RB" if side == "bottom" else "RT"
        v = self.ports[joint - 1][port]
        for e in self.graph.incidence[v]:
            if self.provenance[e][:2] == ("joint", joint):
                which = self.provenance[e][2]
                if which == side:
                    return e
        raise GraphError(f"no {side} joint edge at joint {joint}")

    def w_vertex(self, block: int) -> int:
        return self.w[block - 1]

    def connector_edges(self, comp_index: int, comp: Component) -> tuple[int, ...]:
        if isinstance(comp, K2):
            return (self.graph.edge_index(self.w_vertex(comp.a), self.w_vertex(comp.b)),)
        center = self.star_centers[comp_index]
        return tuple(
            self.graph.edge_index(self.w_vertex(leaf), center) for leaf in comp.blocks()
        )


def build_chain(k: int, twists: frozenset[int] | set[int] = frozenset()) -> tuple[CubicGraph, AssemblyMap]:
    """k block copies joined cyclically; twisted joints cross the two new edges."""
    if k < 3 or k % 2 == 0:
        raise SpecError(f"k must be an odd integer >= 3, got {k}")
    twists = frozenset(twists)
    for i in twists:
        if not (1 <= i <= k):
            raise SpecError(f"twist position {i} outside 1..{k}")
    block = bp_block()
    offsets = tuple(7 * i for i in range(k))
    ports = tuple(
        {name: off + v for name, v in block.ports().items()} for off in offsets
    )
    edges: list[tuple[int, int]] = []
    provenance_pairs: dict[tuple[int, int], tuple] = {}

    def add(u: int, v: int, tag: tuple) -> None:
        key = (u, v) if u < v else (v, u)
        edges.append(key)
        provenance_pairs[key] = tag

    for i in range(1, k + 1):
        off = offsets[i - 1]
        for name, (a, b) in BLOCK_EDGES.items():
            add(off + a, off + b, ("block", i, name))
    for i in range(1, k + 1):
        nxt = i % k + 1
        rb, rt = ports[i - 1]["RB"], ports[i - 1]["RT"]
        lb, lt = ports[nxt - 1]["LB"], ports[nxt - 1]["LT"]
        if i in twists:
            add(rb, lt, ("joint", i, "bottom"))
            add(rt, lb, ("joint", i, "top"))
        else:
            add(rb, lb, ("joint", i, "bottom"))
            add(rt, lt, ("joint", i, "top"))
    g = CubicGraph(7 * k, edges)
    provenance = {g.edge_index(*pair): tag for pair, tag in provenance_pairs.items()}
    amap = AssemblyMap(
        graph=g,
        offsets=offsets,
        ports=ports,
        w=tuple(p["UP"] for p in ports),
        star_centers={},
        provenance=provenance,
    )
    degs = g.degree_sequence()
    assert degs.count(2) == k and degs.count(3) == 6 * k
    return g, amap


def build_connector(k: int, components: tuple[Component, ...]) -> CubicGraph:
    """Connector graph alone: leaves z_1..z_k at indices 0..k-1, star centers after."""
    probe = LPSpec(k=k, connector=components)  # reuses the partition-coverage checks
    edges: list[tuple[int, int]] = []
    n = k
    for comp in probe.connector:
        if isinstance(comp, K2):
            edges.append((comp.a - 1, comp.b - 1))
        else:
            center = n
            n += 1
            edges.extend((leaf - 1, center) for leaf in comp.blocks())
    return CubicGraph(n, edges)


def assemble(spec: LPSpec, check_snark: bool = False) -> tuple[CubicGraph, AssemblyMap]:
    """The full cubic graph: chain plus connector with w_i and z_i identified.

    With check_snark=True the snarkness oracle is run on the result (only
    meaningful for untwisted odd-k specs; it is an instance check, not a proof).
    """
    chain, amap = build_chain(spec.k, spec.twists)
    edges = list(chain.edges)
    provenance_pairs = {chain.edges[e]: tag for e, tag in amap.provenance.items()}
    n = chain.n
    star_centers: dict[int, int] = {}
    for ci, comp in enumerate(spec.connector):
        if isinstance(comp, K2):
            u, v = amap.w_vertex(comp.a), amap.w_vertex(comp.b)
            key = (u, v) if u < v else (v, u)
            edges.append(key)
            provenance_pairs[key] = ("connector", ci, 0)
        else:
            center = n
            n += 1
            star_centers[ci] = center
            for li, leaf in enumerate(comp.blocks()):
                u = amap.w_vertex(leaf)
                key = (u, center) if u < center else (center, u)
                edges.append(key)
                provenance_pairs[key] = ("connector", ci, li)
    g = CubicGraph(n, edges)
    if not g.is_cubic:
        raise AssertionError("assembled graph is not cubic")
    provenance = {g.edge_index(*pair): tag for pair, tag in provenance_pairs.items()}
    full = AssemblyMap(
        graph=g,
        offsets=amap.offsets,
        ports=amap.ports,
        w=amap.w,
        star_centers=star_centers,
        provenance=provenance,
    )
    if check_snark:
        report = is_snark(g)
        if not report.ok:
            raise AssertionError(f"assembled graph failed the snark check: {report.failed_check}")
    return g, full
