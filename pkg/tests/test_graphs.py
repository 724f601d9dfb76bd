"""Core graph operations: contraction, induced subgraphs, isomorphism, canonical form."""

from __future__ import annotations

from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from contractfree.graphs import (
    Graph,
    MAXN,
    automorphism_orbits,
    canonical_form,
    canonical_graph,
    complement,
    contract,
    corner_dominated,
    disjoint_union,
    induced,
    is_isomorphic,
    neighborhood,
    parse_graph6,
    permuted,
    write_graph6,
)


def g6(s: str) -> Graph:
    return parse_graph6(s)


C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
K3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
CLAW = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
TWO_K2 = Graph.from_edges(4, [(0, 1), (2, 3)])
C5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
BULL = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])
K4 = Graph.from_edges(4, list(combinations(range(4), 2)))

# The 11 isomorphism classes on 4 vertices, one labelled representative each.
FOUR_VERTEX_CLASSES = [
    Graph.from_edges(4, []),
    Graph.from_edges(4, [(0, 1)]),
    TWO_K2,
    Graph.from_edges(4, [(0, 1), (1, 2)]),
    P4,
    CLAW,
    Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)]),
    Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]),  # paw
    C4,
    Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3), (1, 3)]),  # diamond
    K4,
]


class TestConstruction:
    def test_from_edges_counts(self):
        assert C4.n == 4
        assert C4.edge_count == 4
        assert C4.degrees() == (2, 2, 2, 2)

    def test_rejects_loop(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(1, 1)])

    def test_rejects_out_of_range_edge(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 3)])

    def test_rejects_asymmetric_rows(self):
        with pytest.raises(ValueError):
            Graph(2, (2, 0))

    def test_rejects_too_many_vertices(self):
        with pytest.raises(ValueError):
            Graph.from_edges(MAXN + 1, [])

    def test_edges_sorted_within_row(self):
        assert P4.edges() == ((0, 1), (1, 2), (2, 3))

    def test_isolated_vertices(self):
        g = Graph.from_edges(4, [(1, 2)])
        assert g.isolated_vertices() == (0, 3)
        assert C4.isolated_vertices() == ()


class TestContract:
    def test_c4_becomes_triangle(self):
        res = contract(C4, 0, 1)
        assert is_isomorphic(res.graph, K3)

    def test_merged_label_and_mapping(self):
        # P4 = 0-1-2-3, contract (1,2): merged vertex 1, vertex 3 slides to 2.
        res = contract(P4, 1, 2)
        assert res.merged == 1
        assert res.mapping == (0, 1, 1, 2)
        assert res.graph == Graph.from_edges(3, [(0, 1), (1, 2)])

    def test_endpoint_order_irrelevant(self):
        assert contract(P4, 2, 1) == contract(P4, 1, 2)

    def test_edge_count_drop(self):
        # |E(G/e)| = |E| - 1 - |N(u) & N(v)|
        for g in (C4, K4, BULL, C5):
            for u, v in g.edges():
                common = len(set(g.neighbors(u)) & set(g.neighbors(v)))
                assert contract(g, u, v).graph.edge_count == g.edge_count - 1 - common

    def test_claw_center_leaf_gives_p3(self):
        res = contract(CLAW, 0, 1)
        assert is_isomorphic(res.graph, P3)

    def test_nonedge_rejected(self):
        with pytest.raises(ValueError, match="not an edge"):
            contract(C4, 0, 2)

    def test_self_pair_rejected(self):
        with pytest.raises(ValueError):
            contract(C4, 1, 1)

    def test_triangle_contraction_drops_parallel(self):
        res = contract(K3, 0, 1)
        assert res.graph == Graph.from_edges(2, [(0, 1)])


class TestInducedAndFriends:
    def test_induced_keeps_ascending_order(self):
        g = induced(C5, [4, 0, 1])
        assert g == Graph.from_edges(3, [(0, 1), (0, 2)])  # kept 0,1,4; 0-1 and 0-4 edges

    def test_induced_rejects_duplicates(self):
        with pytest.raises(ValueError):
            induced(C5, [1, 1, 2])

    def test_induced_empty(self):
        assert induced(C5, []).n == 0

    def test_complement_p4_selfcomplementary(self):
        assert is_isomorphic(complement(P4), P4)
        assert is_isomorphic(complement(C5), C5)
        assert complement(K4).edge_count == 0

    def test_disjoint_union(self):
        g = disjoint_union(Graph.from_edges(2, [(0, 1)]), K3)
        assert g.n == 5
        assert g.edge_count == 4
        assert g.has_edge(0, 1) and g.has_edge(2, 3) and not g.has_edge(1, 2)

    def test_permuted_roundtrip(self):
        mapping = [2, 0, 3, 1]
        h = permuted(P4, mapping)
        inverse = [0] * 4
        for old, new in enumerate(mapping):
            inverse[new] = old
        assert permuted(h, inverse) == P4

    def test_neighborhood_open_closed(self):
        assert neighborhood(P4, 1) == {0, 2}
        assert neighborhood(P4, 1, closed=True) == {0, 1, 2}
        assert neighborhood(P4, [1, 2]) == {0, 3}
        assert neighborhood(P4, [1, 2], closed=True) == {0, 1, 2, 3}

    def test_corner_domination(self):
        # In P3 the end vertex is a corner dominated by the middle one.
        assert corner_dominated(P3, 0, 1)
        assert not corner_dominated(P3, 1, 0)
        # In C4 nothing dominates anything.
        for u in range(4):
            for v in range(4):
                if u != v:
                    assert not corner_dominated(C4, u, v)
        # In a complete graph everyone dominates everyone.
        assert corner_dominated(K3, 0, 1) and corner_dominated(K3, 1, 0)


class TestIsomorphism:
    def test_four_vertex_classes_pairwise_distinct(self):
        for a, b in combinations(FOUR_VERTEX_CLASSES, 2):
            assert not is_isomorphic(a, b)

    def test_relabellings_are_isomorphic(self):
        for g in (P4, C5, BULL, CLAW):
            for perm in permutations(range(g.n)):
                assert is_isomorphic(g, permuted(g, list(perm)))

    def test_same_degree_sequence_not_isomorphic(self):
        # C6 versus two triangles: both 2-regular on 6 vertices.
        c6 = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
        kk = disjoint_union(K3, K3)
        assert not is_isomorphic(c6, kk)

    def test_different_sizes(self):
        assert not is_isomorphic(P3, P4)


class TestCanonicalForm:
    def test_frozen_certificates(self):
        assert canonical_form(C4) == b"C]"
        assert canonical_form(P4) == b"CL"
        assert canonical_form(CLAW) == b"CF"
        assert canonical_form(TWO_K2) == b"CK"
        assert canonical_form(K4) == b"C~"
        assert canonical_form(C5) == b"DLo"
        assert canonical_form(Graph(0, ())) == b"?"
        assert canonical_form(Graph(1, (0,))) == b"@"

    def test_k14_already_canonical(self):
        g = g6("D?{")
        assert canonical_form(g) == b"D?{"

    def test_invariant_under_relabelling(self):
        for g in (P4, C5, BULL, CLAW, K4):
            want = canonical_form(g)
            for perm in permutations(range(g.n)):
                assert canonical_form(permuted(g, list(perm))) == want

    def test_certificate_separates_classes(self):
        certs = {canonical_form(g) for g in FOUR_VERTEX_CLASSES}
        assert len(certs) == len(FOUR_VERTEX_CLASSES)

    def test_certificate_roundtrips(self):
        for g in FOUR_VERTEX_CLASSES + [C5, BULL]:
            cert = canonical_form(g)
            back = parse_graph6(cert.decode("ascii"))
            assert canonical_graph(g) == back
            assert is_isomorphic(back, g)

    def test_agrees_with_is_isomorphic(self):
        pool = FOUR_VERTEX_CLASSES + [permuted(C4, [3, 1, 0, 2]), permuted(P4, [1, 3, 2, 0])]
        for a, b in combinations(pool, 2):
            assert (canonical_form(a) == canonical_form(b)) == is_isomorphic(a, b)


class TestOrbits:
    def test_claw(self):
        assert automorphism_orbits(CLAW) == ((0,), (1, 2, 3))

    def test_bull(self):
        # Triangle 0,1,2 with pendants 3 on 1 and 4 on 2: the apex is alone,
        # the two horn bases pair up, the two horn tips pair up.
        assert automorphism_orbits(BULL) == ((0,), (1, 2), (3, 4))

    def test_cycle_is_transitive(self):
        assert automorphism_orbits(C5) == ((0, 1, 2, 3, 4),)

    def test_path(self):
        assert automorphism_orbits(P4) == ((0, 3), (1, 2))

    def test_orbits_partition(self):
        for g in FOUR_VERTEX_CLASSES:
            orbs = automorphism_orbits(g)
            seen = sorted(v for orb in orbs for v in orb)
            assert seen == list(range(g.n))


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_canonical_form_random_relabelling(data):
    n = data.draw(st.integers(min_value=2, max_value=7))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = data.draw(st.sets(st.sampled_from(pairs)))
    g = Graph.from_edges(n, sorted(chosen))
    perm = data.draw(st.permutations(list(range(n))))
    assert canonical_form(g) == canonical_form(permuted(g, list(perm)))


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_contract_matches_quotient_semantics(data):
    n = data.draw(st.integers(min_value=2, max_value=6))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = data.draw(st.sets(st.sampled_from(pairs)))
    g = Graph.from_edges(n, sorted(chosen))
    if not g.edges():
        return
    u, v = data.draw(st.sampled_from(list(g.edges())))
    res = contract(g, u, v)
    # mapping is surjective onto 0..n-2 and identifies exactly u and v.
    assert sorted(set(res.mapping)) == list(range(n - 1))
    assert res.mapping[u] == res.mapping[v] == res.merged
    # adjacency in the quotient is adjacency of preimages minus the loop.
    for x in range(n):
        for y in range(n):
            if x != y and res.mapping[x] != res.mapping[y]:
                if g.has_edge(x, y):
                    assert res.graph.has_edge(res.mapping[x], res.mapping[y])
    for a, b in res.graph.edges():
        pre_a = [x for x in range(n) if res.mapping[x] == a]
        pre_b = [x for x in range(n) if res.mapping[x] == b]
        assert any(g.has_edge(x, y) for x in pre_a for y in pre_b)
