import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from snarkforge.graph import CubicGraph
from snarkforge.loupekhine import K2, LPSpec, Star, mansha_spec
from snarkforge.petersen import petersen_graph


@pytest.fixture
def p10() -> CubicGraph:
    return petersen_graph()


@pytest.fixture
def k4() -> CubicGraph:
    return CubicGraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def q3() -> CubicGraph:
    return CubicGraph(8, [(i, i ^ b) for i in range(8) for b in (1, 2, 4) if i < (i ^ b)])


@pytest.fixture
def triangle() -> CubicGraph:
    return CubicGraph(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def path4() -> CubicGraph:
    return CubicGraph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def two_petersen_bridge() -> CubicGraph:
    """Two Petersen copies, one edge dropped in each, rejoined by a 2-edge cut.

    Cubic, but the 2-cut separates two cyclic parts: the canonical negative
    example for cyclic 4-edge-connectivity.
    """
    g = petersen_graph()
    u, v = g.edges[0]
    kept = [e for e in g.edges if e != (u, v)]
    edges = list(kept)
    edges.extend((a + 10, b + 10) for a, b in kept)
    edges.append((u, u + 10))
    edges.append((v, v + 10))
    return CubicGraph(20, edges)


K3_STAR_SPEC = LPSpec(k=3, connector=(Star(1, 2, 3),), partition=(1, 1, 1))

K9_333_SPEC = LPSpec(
    k=9,
    connector=(K2(1, 2), Star(3, 6, 9), K2(4, 5), K2(7, 8)),
    partition=(3, 3, 3),
)


def corpus_specs() -> dict[str, LPSpec]:
    """The acceptance corpus: the k=3 star, the one-star family, and a k=9
    three-segment spec with intra-segment K2s."""
    specs = {"k3-star": K3_STAR_SPEC}
    for k in (5, 7, 9, 11):
        specs[f"mansha{k}"] = mansha_spec(k)
    specs["k9-333"] = K9_333_SPEC
    return specs
