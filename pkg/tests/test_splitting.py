"""Vertex splitting: single moves, per-vertex and per-graph enumeration,
and the family-free subsets."""

import logging

import pytest

from contractfree.families import cycle_graph, named, path_graph
from contractfree.graphs import (
    Graph,
    corner_dominated,
    disjoint_union,
    is_isomorphic,
    write_graph6,
)
from contractfree.hfree import (
    Family,
    SplitSpec,
    exists_induced,
    free_splits,
    splitting_family,
    splitting_graph,
    splitting_one,
    splitting_vertex,
)

CLAW = named("claw")
BULL = named("bull")
K2 = named("k2")
C3 = named("c3")
C4 = named("c4")
C5 = named("c5")
C6 = named("c6")
P3 = named("p3")
TWO_K2 = named("2k2")


class TestSplittingOne:
    def test_triangle_becomes_c4(self):
        # Split a C3 vertex handing one neighbor to each replacement.
        spec = SplitSpec(C3, 0, frozenset({1}), frozenset({2}))
        assert is_isomorphic(splitting_one(spec), C4)

    def test_k2_overlapping_parts_give_triangle(self):
        spec = SplitSpec(K2, 0, frozenset({1}), frozenset({1}))
        assert is_isomorphic(splitting_one(spec), C3)

    def test_k2_empty_part_gives_path(self):
        spec = SplitSpec(K2, 0, frozenset({1}), frozenset())
        result = splitting_one(spec)
        assert is_isomorphic(result, P3)

    def test_empty_part_leaves_dominated_corner(self):
        # The replacement vertex with no outside neighbors is a corner
        # dominated by its twin, so the host reappears induced.
        host = C5
        spec = SplitSpec(host, 0, frozenset(host.neighbors(0)), frozenset())
        result = splitting_one(spec)
        n = result.n
        assert corner_dominated(result, n - 1, n - 2)
        assert exists_induced(result, host)

    def test_vertex_count_and_replacement_edge(self):
        spec = SplitSpec(CLAW, 0, frozenset({1, 2}), frozenset({3}))
        result = splitting_one(spec)
        assert result.n == CLAW.n + 1
        assert result.has_edge(result.n - 2, result.n - 1)

    def test_cover_validation(self):
        with pytest.raises(ValueError):
            SplitSpec(C4, 0, frozenset({1}), frozenset())  # misses neighbor 3
        with pytest.raises(ValueError):
            SplitSpec(C4, 0, frozenset({1, 2}), frozenset({3}))  # 2 not a neighbor


class TestSplittingVertex:
    def test_k2_gives_both_shapes(self):
        fam = splitting_vertex(K2, 0)
        assert fam == Family((C3, P3))

    def test_isolated_vertex_rejected(self):
        lonely = Graph.from_edges(3, [(0, 1)])
        with pytest.raises(ValueError):
            splitting_vertex(lonely, 2)

    def test_size_bound_respected(self):
        big = cycle_graph(12)
        with pytest.raises(ValueError):
            splitting_vertex(big, 0)

    def test_claw_center_vs_leaf(self):
        # Center split: distributions of 3 leaves over (left, right, both)
        # up to swapping the replacements, 6 classes. Leaf split: 2.
        center = splitting_vertex(CLAW, 0)
        leaf = splitting_vertex(CLAW, 1)
        assert len(center) == 6
        assert len(leaf) == 2


class TestSplittingGraph:
    def test_claw_has_six(self):
        fam = splitting_graph(CLAW)
        assert len(fam) == 6
        assert BULL in fam

    def test_2k2_set(self):
        fam = splitting_graph(TWO_K2)
        want = Family((disjoint_union(K2, C3), disjoint_union(K2, P3)))
        assert fam == want

    def test_c4_and_c5_counts(self):
        assert len(splitting_graph(C4)) == 4
        assert len(splitting_graph(C5)) == 4

    def test_members_one_vertex_larger(self):
        for member in splitting_graph(C5):
            assert member.n == 6

    def test_isolated_vertices_skipped_with_warning(self, caplog):
        host = disjoint_union(K2, Graph(1, (0,)))
        with caplog.at_level(logging.WARNING):
            fam = splitting_graph(host)
        assert any("isolated" in rec.message for rec in caplog.records)
        # Only the K2 vertices were split; every member keeps the isolate.
        assert all(member.isolated_vertices() for member in fam)

    def test_orbit_reduction_matches_full_union(self):
        # Splitting per orbit representative must equal the union over
        # all vertices.
        for host in (C5, CLAW, named("paw")):
            via_orbits = splitting_graph(host)
            full = Family.of(
                (m for v in range(host.n) for m in splitting_vertex(host, v)),
                dedup=True,
            )
            assert via_orbits == full


class TestSplittingFamilyAndFreeSplits:
    def test_family_union(self):
        fam = splitting_family(Family((K2, C3)))
        want = Family.of(
            tuple(splitting_graph(K2)) + tuple(splitting_graph(C3)), dedup=True
        )
        assert fam == want

    def test_free_splits_claw(self):
        assert free_splits(Family((CLAW,))) == Family((BULL,))

    def test_free_splits_empty_cases(self):
        assert len(free_splits(Family((TWO_K2,)))) == 0
        assert len(free_splits(Family((named("p4"),)))) == 0

    def test_free_splits_cycles(self):
        assert free_splits(Family((C4,))) == Family((C5,))
        assert free_splits(Family((C5,))) == Family((C6,))

    def test_paths_have_no_free_splits(self):
        for k in range(2, 7):
            assert len(free_splits(Family((path_graph(k),)))) == 0

    def test_bull_contracts_back_to_claw(self):
        # Sanity link: every splitting member has a contraction equal to
        # the host, witnessed here for the free split of the claw.
        from contractfree.graphs import contract

        hits = [
            e
            for e in BULL.edges()
            if is_isomorphic(contract(BULL, *e).graph, CLAW)
        ]
        assert hits, write_graph6(BULL)
