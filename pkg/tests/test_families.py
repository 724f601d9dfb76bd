"""Named graphs, figure generators, golden corpus, and class recognizers."""

import pytest

from contractfree.families import (
    FIGURE_IDS,
    complete_bipartite,
    complete_graph,
    corpus_text,
    cycle_graph,
    figure_family,
    figure_graphs,
    is_pseudo_split,
    is_split,
    is_threshold,
    named,
    path_graph,
)
from contractfree.graphs import canonical_form, is_isomorphic
from contractfree.hfree import Family, exists_induced, is_h_free


class TestNamed:
    def test_fixed_shapes(self):
        claw = named("claw")
        assert sorted(claw.degrees()) == [1, 1, 1, 3]
        bull = named("bull")
        assert bull.n == 5 and bull.edge_count == 5
        assert sorted(bull.degrees()) == [1, 1, 2, 3, 3]
        assert named("2k2").edge_count == 2
        assert named("gem").n == 5 and named("gem").edge_count == 7
        assert named("butterfly").edge_count == 6

    def test_parametrised_names(self):
        assert is_isomorphic(named("p4"), path_graph(4))
        assert is_isomorphic(named("c5"), cycle_graph(5))
        assert is_isomorphic(named("k4"), complete_graph(4))
        assert is_isomorphic(named("k2,3"), complete_bipartite(2, 3))
        assert is_isomorphic(named("K1,3"), named("claw"))

    def test_aliases_case_insensitive(self):
        assert named("CLAW") == named("claw")
        assert named("C5") == named("c5")

    def test_invalid_names(self):
        for bad in ("c2", "p0", "nosuch", "k1,", "p-3"):
            with pytest.raises(ValueError):
                named(bad)

    def test_k0_is_the_empty_graph(self):
        assert named("k0").n == 0

    def test_house_is_complement_of_p5(self):
        from contractfree.graphs import complement

        assert is_isomorphic(named("house"), complement(named("p5")))


class TestFigureGenerators:
    def test_known_ids(self):
        assert "fig1" in FIGURE_IDS and "fig12" in FIGURE_IDS
        assert "fig3" not in FIGURE_IDS
        with pytest.raises(ValueError):
            figure_graphs("fig99")

    def test_fig1_members(self):
        members = figure_graphs("fig1")
        assert len(members) == 6
        assert all(m.graph.n == 5 for m in members)
        fam = figure_family("fig1")
        assert named("bull") in fam

    def test_fig2_fixed_members(self):
        fam = figure_family("fig2")
        assert len(fam) == 6
        for name in ("claw", "k2,3", "k3,3"):
            assert named(name) in fam

    def test_fig5_and_fig8_counts(self):
        assert len(figure_graphs("fig5")) == 4
        assert len(figure_graphs("fig8")) == 4

    def test_parameter_labels_recorded(self):
        members = figure_graphs("fig4", max_n=7)
        assert all(m.figure == "fig4" for m in members)
        assert any(m.params for m in members)
        labels = {m.label for m in members}
        assert labels  # every member carries its branch label

    def test_members_have_no_isolated_vertices(self):
        for fig in FIGURE_IDS:
            for m in figure_graphs(fig):
                assert not m.graph.isolated_vertices(), (fig, m.label)

    def test_members_unique_up_to_isomorphism(self):
        for fig in FIGURE_IDS:
            certs = [canonical_form(m.graph) for m in figure_graphs(fig)]
            assert len(certs) == len(set(certs)), fig

    def test_smaller_bound_is_prefix_set(self):
        small = {canonical_form(m.graph) for m in figure_graphs("fig9", max_n=7)}
        big = {canonical_form(m.graph) for m in figure_graphs("fig9", max_n=9)}
        assert small <= big

    def test_bound_validation(self):
        with pytest.raises(ValueError):
            figure_graphs("fig1", max_n=13)

    def test_c6_only_lives_in_fig11(self):
        c6_cert = canonical_form(named("c6"))
        fig11 = {canonical_form(m.graph) for m in figure_graphs("fig11")}
        fig10 = {canonical_form(m.graph) for m in figure_graphs("fig10")}
        assert c6_cert in fig11
        assert c6_cert not in fig10


class TestGoldenCorpus:
    def test_packaged_files_match_generator(self):
        from importlib import resources

        for fig in FIGURE_IDS:
            ref = resources.files("contractfree").joinpath("corpus", f"{fig}.g6")
            assert ref.read_text(encoding="ascii") == corpus_text(fig), fig

    def test_corpus_text_layout(self):
        text = corpus_text("fig1")
        lines = text.splitlines()
        assert lines[0].startswith("# fig1: 6 members")
        body = [l for l in lines if l and not l.startswith("#")]
        assert len(body) == 6

    def test_corpus_parses_back(self):
        from contractfree.hfree import family_from_lines

        fam = family_from_lines(corpus_text("fig5"))
        assert fam == figure_family("fig5")


SPLIT_CASES = [
    ("k4", True),
    ("c4", False),
    ("c5", False),
    ("p4", True),
    ("claw", True),
    ("2k2", False),
    ("house", False),
    ("gem", True),
    ("paw", True),
    ("k1,4", True),
]


class TestRecognizers:
    @pytest.mark.parametrize("name,want", SPLIT_CASES)
    def test_is_split(self, name, want):
        assert is_split(named(name)) is want

    def test_split_both_methods(self):
        for name, want in SPLIT_CASES:
            assert is_split(named(name), "splittance") is want

    def test_pseudo_split(self):
        assert is_pseudo_split(named("c5"))
        assert is_pseudo_split(named("gem"))
        assert not is_pseudo_split(named("c4"))
        assert not is_pseudo_split(named("2k2"))
        assert not is_pseudo_split(named("c6"))

    def test_threshold(self):
        assert is_threshold(named("k1,3"))
        assert is_threshold(named("k4"))
        assert not is_threshold(named("p4"))
        assert not is_threshold(named("c5"))
        assert not is_threshold(named("gem"))

    def test_threshold_both_methods(self):
        for name in ("k1,3", "k4", "p4", "c5", "gem", "paw", "house"):
            g = named(name)
            assert is_threshold(g) == is_threshold(g, "elimination")

    def test_unknown_methods(self):
        with pytest.raises(ValueError):
            is_split(named("c4"), "psychic")
        with pytest.raises(ValueError):
            is_threshold(named("c4"), "psychic")

    def test_split_equals_forbidden_set(self, space_cache):
        fam = Family(tuple(named(n) for n in ("2k2", "c4", "c5")))
        for g in space_cache.space(5, False).graphs:
            assert is_split(g) == is_h_free(g, fam)

    def test_class_inclusions(self, space_cache):
        # threshold within split within pseudo-split.
        for g in space_cache.space(6, False).graphs:
            if is_threshold(g):
                assert is_split(g)
            if is_split(g):
                assert is_pseudo_split(g)


class TestFigureSemantics:
    def test_fig2_members_contain_claw(self):
        claw = named("claw")
        for m in figure_graphs("fig2"):
            assert exists_induced(m.graph, claw), m.label

    def test_fig10_members_are_not_split(self):
        for m in figure_graphs("fig10"):
            assert not is_split(m.graph), m.label

    def test_fig12_members_are_not_threshold(self):
        for m in figure_graphs("fig12"):
            assert not is_threshold(m.graph), m.label
