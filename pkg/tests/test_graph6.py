"""graph6 codec tests against hand-computed encodings."""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from contractfree.graphs import Graph, Graph6Error, MAXN, parse_graph6, write_graph6

# Hand-derived fixtures: name -> (graph6, n, edge list).
FROZEN = {
    "K0": ("?", 0, []),
    "K1": ("@", 1, []),
    "K2": ("A_", 2, [(0, 1)]),
    "E2": ("A?", 2, []),
    "K4": ("C~", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    "P4": ("Ch", 4, [(0, 1), (1, 2), (2, 3)]),
    "C4": ("Cl", 4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    "claw": ("Cs", 4, [(0, 1), (0, 2), (0, 3)]),
    "2K2": ("C`", 4, [(0, 1), (2, 3)]),
    "C5": ("Dhc", 5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
    "K14": ("D?{", 5, [(0, 4), (1, 4), (2, 4), (3, 4)]),
    "bull": ("DyG", 5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),
}


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_parse_frozen(name):
    text, n, edges = FROZEN[name]
    g = parse_graph6(text)
    assert g == Graph.from_edges(n, edges)


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_write_frozen(name):
    text, n, edges = FROZEN[name]
    assert write_graph6(Graph.from_edges(n, edges)) == text


def test_trailing_newline_tolerated():
    assert parse_graph6("C~\n").n == 4
    assert parse_graph6("C~\r\n").n == 4


@pytest.mark.parametrize(
    "bad,fragment",
    [
        ("", "empty"),
        (">>graph6<<C~", "header"),
        ("~??", "multi-byte"),
        (" C~", "order byte"),
        ("M???????????????????", "exceeds MAXN"),  # n = 14
        ("C", "expected"),
        ("C~~", "expected"),
        ("C\x1c", "out of range"),
        ("A" + chr(63 + 16), "padding"),
    ],
)
def test_parse_rejects(bad, fragment):
    with pytest.raises(Graph6Error) as err:
        parse_graph6(bad)
    assert fragment in str(err.value)


def test_padding_must_be_zero():
    # order 2 uses a single bit; "A" + chr(63 + 1) sets a padding bit only.
    with pytest.raises(Graph6Error, match="padding"):
        parse_graph6("A" + chr(63 + 1))
    # highest bit set is the real edge bit: fine.
    assert parse_graph6("A" + chr(63 + 32)).edge_count == 1


def test_distinct_error_classes_are_valueerror():
    with pytest.raises(ValueError):
        parse_graph6("oops")


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_roundtrip_random(data):
    n = data.draw(st.integers(min_value=0, max_value=MAXN))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = data.draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    g = Graph.from_edges(n, sorted(chosen))
    assert parse_graph6(write_graph6(g)) == g
