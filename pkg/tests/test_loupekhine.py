from itertools import combinations

import pytest

from snarkforge.errors import GraphError, SpecError
from snarkforge.graph import are_isomorphic, canonical_form, girth
from snarkforge.loupekhine import (
    BLOCK_EDGE_NAMES,
    K2,
    LPSpec,
    Star,
    assemble,
    block_removal,
    bp_block,
    build_chain,
    build_connector,
    check_compatibility,
    mansha_spec,
)

from conftest import K3_STAR_SPEC, corpus_specs


# --- the block ---------------------------------------------------------------


def test_block_profile():
    b = bp_block()
    assert (b.graph.n, b.graph.m) == (7, 8)
    assert b.graph.degree_sequence() == (2, 2, 2, 2, 2, 3, 3)
    for port in b.ports().values():
        assert b.graph.degree(port) == 2


def test_block_removal_every_2_path_of_petersen_gives_the_block(p10):
    reference = canonical_form(bp_block().graph).edges
    count = 0
    for v in range(p10.n):
        for u, w in combinations(p10.neighbors(v), 2):
            block = block_removal(p10, (u, v, w))
            assert (block.graph.n, block.graph.m) == (7, 8)
            assert block.graph.degree_sequence() == (2, 2, 2, 2, 2, 3, 3)
            assert canonical_form(block.graph).edges == reference
            count += 1
    assert count == 30


def test_block_removal_rejects_non_snark(k4):
    with pytest.raises(GraphError):
        block_removal(k4, (0, 1, 2))


def test_block_removal_rejects_non_path(p10):
    with pytest.raises(GraphError):
        block_removal(p10, (0, 1, 1))
    with pytest.raises(GraphError):
        block_removal(p10, (0, 2, 4))  # 0-2 is not an edge


# --- chain ---------------------------------------------------------------------


def test_chain_k3_counts():
    g, amap = build_chain(3)
    assert (g.n, g.m) == (21, 30)
    assert g.degree_sequence().count(2) == 3
    assert amap.w == (6, 13, 20)


def test_chain_rejects_even_k_and_bad_twists():
    with pytest.raises(SpecError):
        build_chain(4)
    with pytest.raises(SpecError):
        build_chain(3, {0})
    with pytest.raises(SpecError):
        build_chain(3, {4})


def test_chain_twist_parity_isomorphism():
    plain, _ = build_chain(3)
    double, _ = build_chain(3, {1, 2})
    single_1, _ = build_chain(3, {1})
    single_2, _ = build_chain(3, {2})
    assert are_isomorphic(plain, double)
    assert are_isomorphic(single_1, single_2)
    assert not are_isomorphic(plain, single_1)


# --- connector ---------------------------------------------------------------------


def test_connector_k3_star_is_a_claw():
    g = build_connector(3, (Star(1, 2, 3),))
    assert (g.n, g.m) == (4, 3)
    assert g.degree_sequence() == (1, 1, 1, 3)


def test_connector_k5_one_star_one_k2():
    g = build_connector(5, (Star(1, 3, 4), K2(2, 5)))
    assert (g.n, g.m) == (6, 4)
    assert g.degree_sequence().count(1) == 5


def test_connector_rejects_even_k_and_non_partition():
    with pytest.raises(SpecError):
        build_connector(4, (K2(1, 2), K2(3, 4)))
    with pytest.raises(SpecError):
        build_connector(5, (Star(1, 2, 3), K2(2, 5)))  # block 2 used twice
    with pytest.raises(SpecError):
        build_connector(5, (Star(1, 2, 3),))  # blocks 4, 5 missing


def test_connector_component_arithmetic():
    for spec in corpus_specs().values():
        k2s = sum(1 for c in spec.connector if isinstance(c, K2))
        stars = spec.num_stars()
        assert 2 * k2s + 3 * stars == spec.k
        assert stars % 2 == 1


# --- assembly -------------------------------------------------------------------------


def test_assemble_k3_star():
    g, _ = assemble(K3_STAR_SPEC)
    assert (g.n, g.m) == (22, 33)
    assert g.is_cubic
    assert girth(g) == 5


def test_assemble_mansha5():
    g, _ = assemble(mansha_spec(5))
    assert (g.n, g.m) == (36, 54)
    assert g.is_cubic


def test_assemble_is_cubic_for_whole_corpus():
    for name, spec in corpus_specs().items():
        g, _ = assemble(spec)
        assert g.is_cubic, name
        assert g.n == 7 * spec.k + spec.num_stars()


def test_assemble_one_twist_not_isomorphic_to_untwisted():
    from dataclasses import replace

    g0, _ = assemble(K3_STAR_SPEC)
    g1, _ = assemble(replace(K3_STAR_SPEC, twists=frozenset({1})))
    assert (g1.n, g1.m) == (22, 33)
    assert not are_isomorphic(g0, g1)


def test_assembly_map_round_trip():
    spec = mansha_spec(5)
    g, amap = assemble(spec)
    # every edge has exactly one provenance entry
    assert sorted(amap.provenance) == list(range(g.m))
    # and the named lookups cover the edge set exactly once
    seen = set()
    for block in range(1, spec.k + 1):
        for name in BLOCK_EDGE_NAMES:
            seen.add(amap.block_edge(block, name))
        for side in ("bottom", "top"):
            seen.add(amap.joint_edge(block, side))
    for ci, comp in enumerate(spec.connector):
        seen.update(amap.connector_edges(ci, comp))
    assert seen == set(range(g.m))


def test_assembly_map_offsets_and_w_vertices():
    spec = mansha_spec(7)
    _, amap = assemble(spec)
    assert list(amap.offsets) == sorted(amap.offsets)
    assert len(set(amap.w)) == spec.k
    for i in range(1, spec.k + 1):
        assert amap.w_vertex(i) == amap.offsets[i - 1] + 6


def test_assemble_check_snark_flag():
    g, _ = assemble(K3_STAR_SPEC, check_snark=True)
    assert g.is_cubic


# --- specs ------------------------------------------------------------------------------


def test_mansha_spec_k5_matches_the_published_family():
    spec = mansha_spec(5)
    assert spec.connector == (Star(1, 3, 4), K2(2, 5))
    assert spec.partition == (3, 1, 1)
    assert spec.twists == frozenset()


def test_mansha_spec_k7():
    spec = mansha_spec(7)
    assert spec.connector == (Star(1, 4, 5), K2(2, 7), K2(3, 6))
    assert spec.partition == (5, 1, 1)


def test_mansha_k2s_always_inside_the_first_segment():
    for k in (5, 7, 9, 11, 13):
        spec = mansha_spec(k)
        compat = check_compatibility(spec)
        assert compat.ok, compat.detail
        for comp in spec.connector:
            if isinstance(comp, K2):
                assert spec.segment_of(comp.a) == 1
                assert spec.segment_of(comp.b) == 1


def test_mansha_spec_rejects_k3_and_even():
    with pytest.raises(SpecError):
        mansha_spec(3)
    with pytest.raises(SpecError):
        mansha_spec(6)


def test_spec_invariant_validation():
    with pytest.raises(SpecError):
        LPSpec(k=4, connector=(K2(1, 2), K2(3, 4)))
    with pytest.raises(SpecError):
        LPSpec(k=3, connector=(Star(1, 2, 3),), twists=frozenset({7}))
    with pytest.raises(SpecError):
        LPSpec(k=3, connector=(Star(1, 2, 3),), partition=(1, 2, 0))
    with pytest.raises(SpecError):
        LPSpec(k=5, connector=(Star(1, 2, 3), K2(4, 5)), partition=(3, 3, 3))
    with pytest.raises(SpecError):
        LPSpec(k=3, connector=(Star(1, 2, 3),), rotation=3)


def test_segment_positions_under_rotation():
    spec = mansha_spec(5)  # rotation 4: positions host blocks 5,1,2,3,4
    assert [spec.block_at(p) for p in range(1, 6)] == [5, 1, 2, 3, 4]
    assert spec.segment_of(5) == 1 and spec.segment_of(2) == 1
    assert spec.segment_of(3) == 2
    assert spec.segment_of(4) == 3


def test_compatibility_detects_violations():
    bad_k2 = LPSpec(k=5, connector=(Star(1, 2, 3), K2(4, 5)), partition=(1, 3, 1))
    compat = check_compatibility(bad_k2)
    assert not compat.k2_ok

    bad_star = LPSpec(
        k=9,
        connector=(Star(1, 2, 4), Star(3, 5, 6), Star(7, 8, 9)),
        partition=(3, 3, 3),
    )
    # no K2s to violate, but Star(7,8,9) has all leaves in segment 3
    assert check_compatibility(bad_star).k2_ok
    assert not check_compatibility(bad_star).star_ok
