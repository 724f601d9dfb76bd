"""Named small graphs, figure-family generators, and class recognizers.

The figure generators are the riskiest part of the artifact: each
drawing was transcribed once into base edges plus independent blow-up
classes (a class vertex is adjacent to exactly its stated base
vertices, never to other class vertices). Golden corpus files lock the
output; the verification harness independently cross-checks every set
against exhaustive scans.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, MAXN, canonical_form, write_graph6
from .hfree import Family, is_h_free

# ---------------------------------------------------------------------------
# named graphs
# ---------------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, list(combinations(range(n), 2)))


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 0 or n < 0:
        raise ValueError("part sizes must be nonnegative")
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


_FIXED_NAMES = {
    "claw": lambda: complete_bipartite(1, 3),
    "bull": lambda: Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),
    "2k2": lambda: Graph.from_edges(4, [(0, 1), (2, 3)]),
    "paw": lambda: Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]),
    "diamond": lambda: Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]),
    "house": lambda: Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 1)]),
    "gem": lambda: Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]),
    "butterfly": lambda: Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]),
    "wheel4": lambda: Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)]),
    "octahedron": lambda: Graph.from_edges(
        6, [(u, v) for u, v in combinations(range(6), 2) if (u, v) not in ((0, 3), (1, 4), (2, 5))]
    ),
}


def named(name: str) -> Graph:
    """Build a graph from a compact name.

    Fixed names: claw, bull, 2k2, paw, diamond, house, gem, butterfly,
    wheel4, octahedron. Parameterized: p<n> (path), c<n> (cycle),
    k<n> (complete), k<m>,<n> (complete bipartite). Case-insensitive.
    """
    token = name.strip().lower().replace(" ", "")
    if token in _FIXED_NAMES:
        return _FIXED_NAMES[token]()
    try:
        if token.startswith("p") and token[1:].isdigit():
            return path_graph(int(token[1:]))
        if token.startswith("c") and token[1:].isdigit():
            return cycle_graph(int(token[1:]))
        if token.startswith("k") and "," in token:
            left, right = token[1:].split(",", 1)
            return complete_bipartite(int(left), int(right))
        if token.startswith("k") and token[1:].isdigit():
            return complete_graph(int(token[1:]))
    except ValueError as exc:
        raise ValueError(f"invalid graph name {name!r}: {exc}") from exc
    raise ValueError(f"unknown graph name {name!r}")


# ---------------------------------------------------------------------------
# figure families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FigureMember:
    """One generated instance: which figure, which drawing, which sizes."""

    figure: str
    label: str
    params: tuple[tuple[str, int], ...]
    graph: Graph


@dataclass(frozen=True)
class _Branch:
    label: str
    base_n: int
    base_edges: tuple[tuple[int, int], ...]
    classes: tuple[tuple[str, tuple[int, ...]], ...] = ()


_C5_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4))
_C6_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5))

# Independent-edge pair base used by several blow-up branches.
_2K2_EDGES = ((0, 1), (2, 3))

_OCTA_EDGES = tuple(
    (u, v) for u, v in combinations(range(6), 2) if (u, v) not in ((0, 3), (1, 4), (2, 5))
)
_WHEEL_EDGES = ((0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3))
_BUTTERFLY_EDGES = ((0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4))
_TADPOLE_EDGES = ((0, 1), (0, 2), (1, 2), (2, 3), (3, 4))

_FIGURES: dict[str, tuple[_Branch, ...]] = {
    # splittings of the claw: six fixed graphs
    "fig1": (
        _Branch("h1", 5, ((0, 1), (0, 2), (1, 2), (2, 3), (0, 3), (0, 4))),
        _Branch("h2", 5, ((0, 1), (0, 2), (1, 2), (0, 3), (0, 4))),
        _Branch("h3", 5, ((0, 1), (0, 2), (0, 3), (0, 4))),
        _Branch("h4", 5, ((0, 1), (1, 2), (0, 3), (0, 4))),
        _Branch("h5", 5, ((0, 1), (0, 2), (1, 2), (1, 3), (2, 4))),
        _Branch("h6", 5, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4))),
    ),
    # contraction-critical graphs for the claw
    "fig2": (
        _Branch("h1", 4, ((0, 1), (0, 2), (0, 3))),
        _Branch("h2", 5, ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4))),
        _Branch("h3", 6, tuple((i, 3 + j) for i in range(3) for j in range(3))),
        _Branch("h4", 5, ((0, 1), (0, 2), (0, 3), (4, 2), (4, 3))),
        _Branch("h5", 6, ((0, 1), (0, 2), (0, 3), (4, 2), (4, 3), (5, 1), (5, 2))),
        _Branch("h6", 6, ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (5, 3), (5, 4))),
    ),
    # contraction-critical graphs for two independent edges
    "fig4": (
        _Branch("h1", 6, _C6_EDGES),
        _Branch("h2", 6, _C6_EDGES + ((0, 2),)),
        _Branch("h3", 6, _C6_EDGES + ((0, 2), (3, 5))),
        _Branch("h4", 7, ((0, 1), (2, 3), (4, 0), (4, 3), (5, 0), (5, 2), (6, 1), (6, 2), (6, 3))),
        _Branch("h5", 4, _2K2_EDGES, (("w", (0, 1, 2)), ("x", (0, 1, 3)), ("y", (0, 1, 2, 3)))),
        _Branch("h6", 4, _2K2_EDGES, (("w", (1, 2)), ("x", (1, 3)), ("y", (1, 2, 3)), ("z", (0, 1, 2, 3)))),
    ),
    # splittings of the 4-cycle
    "fig5": (
        _Branch("h1", 5, _C5_EDGES),
        _Branch("h2", 5, _C5_EDGES + ((0, 2), (1, 3))),
        _Branch("h3", 5, _C5_EDGES + ((0, 2),)),
        _Branch("h4", 5, ((0, 1), (1, 2), (2, 3), (0, 3), (0, 4))),
    ),
    # contraction-critical graphs for the 4-path
    "fig6": (
        _Branch("h1", 5, _C5_EDGES),
        _Branch("h2", 5, _C5_EDGES + ((4, 1),)),
        _Branch("h3", 6, _C5_EDGES + ((4, 1), (5, 0), (5, 2), (5, 3))),
        _Branch("h4", 4, ((0, 1), (1, 2), (2, 3)), (("w", (0, 2)),)),
        _Branch("h5", 4, ((0, 1), (1, 2), (2, 3)), (("w", (0, 1, 2, 3)),)),
    ),
    # contraction-critical graphs for the 4-cycle
    "fig7": (
        _Branch("h1", 4, ((0, 1), (1, 2), (2, 3), (0, 3)), (("w", (1, 3)),)),
        _Branch("h2", 5, _WHEEL_EDGES),
        _Branch("h3", 6, _OCTA_EDGES),
    ),
    # splittings of the 5-cycle
    "fig8": (
        _Branch("h1", 6, _C6_EDGES),
        _Branch("h2", 6, _C6_EDGES + ((0, 2), (1, 3))),
        _Branch("h3", 6, _C6_EDGES + ((0, 2),)),
        _Branch("h4", 6, _C5_EDGES + ((0, 5),)),
    ),
    # contraction-critical graphs for the 5-cycle
    "fig9": (
        _Branch("h1", 7, _C5_EDGES + ((5, 0), (5, 2), (5, 3), (6, 1), (6, 2), (6, 3), (6, 4))),
        _Branch(
            "h2", 7,
            _C5_EDGES + ((5, 0), (5, 2), (5, 3), (6, 1), (6, 3), (6, 4)),
            (("y", (0, 1, 3)),),
        ),
        _Branch(
            "h3", 7,
            _C5_EDGES + ((5, 0), (5, 1), (5, 2), (5, 3), (6, 1), (6, 2), (6, 3), (6, 4)),
            (("y", (0, 2, 4)),),
        ),
        _Branch("h4", 5, _C5_EDGES, (("w", (0, 2)), ("x", (0, 3)), ("y", (0, 2, 3)))),
        _Branch(
            "h5", 5, _C5_EDGES,
            (("w", (0, 2)), ("x", (0, 2, 3)), ("y", (0, 2, 4)), ("z", (0, 2, 3, 4))),
        ),
        _Branch(
            "h6", 5, _C5_EDGES,
            (("w", (0, 2, 3)), ("x", (0, 2, 4)), ("y", (0, 1, 2, 3)), ("z", (0, 2, 3, 4)),
             ("a", (0, 1, 2, 3, 4))),
        ),
    ),
    # contraction-critical non-split graphs
    "fig10": (
        _Branch("h1", 4, ((0, 1), (1, 2), (2, 3), (0, 3)), (("w", (1, 3)),)),
        _Branch("h2", 5, _WHEEL_EDGES),
        _Branch("h3", 6, _OCTA_EDGES),
        _Branch("h4", 4, _2K2_EDGES),
        _Branch("h5", 5, ((0, 1), (1, 2), (2, 3), (3, 4))),
        _Branch("h6", 5, _TADPOLE_EDGES),
        _Branch("h7", 5, _BUTTERFLY_EDGES),
    ),
    # contraction-critical non-pseudo-split graphs
    "fig11": (
        _Branch("h1", 4, ((0, 1), (1, 2), (2, 3), (0, 3)), (("w", (1, 3)),)),
        _Branch("h2", 5, _WHEEL_EDGES),
        _Branch("h3", 6, _OCTA_EDGES),
        _Branch("h4", 6, _C6_EDGES),
        _Branch("h5", 4, _2K2_EDGES),
        _Branch("h6", 5, ((0, 1), (1, 2), (2, 3), (3, 4))),
        _Branch("h7", 5, _TADPOLE_EDGES),
        _Branch("h8", 5, _BUTTERFLY_EDGES),
    ),
    # contraction-critical non-threshold graphs
    "fig12": (
        _Branch("h1", 4, ((0, 1), (1, 2), (2, 3), (0, 3)), (("w", (1, 3)),)),
        _Branch("h2", 5, _WHEEL_EDGES),
        _Branch("h3", 6, _OCTA_EDGES),
        _Branch("h4", 4, _2K2_EDGES),
        _Branch("h5", 4, ((0, 1), (1, 2), (2, 3))),
        _Branch("h6", 5, ((0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3))),
        _Branch("h7", 5, _BUTTERFLY_EDGES),
    ),
}

FIGURE_IDS = tuple(sorted(_FIGURES, key=lambda s: int(s[3:])))


def _compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    if parts == 0:
        return [()] if total == 0 else []
    out = []
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


def _instantiate(branch: _Branch, counts: tuple[int, ...]) -> Graph:
    n = branch.base_n + sum(counts)
    edges = list(branch.base_edges)
    nxt = branch.base_n
    for (name, nbrs), count in zip(branch.classes, counts):
        for _ in range(count):
            edges.extend((nxt, b) for b in nbrs)
            nxt += 1
    return Graph.from_edges(n, edges)


def figure_graphs(figure: str, max_n: int = 9) -> tuple[FigureMember, ...]:
    """Every instance of a figure family with at most max_n vertices.

    Parameterized classes range over all multiplicity vectors from zero
    upward; instances are emitted smallest-first and deduplicated up to
    isomorphism, keeping the first occurrence.
    """
    if figure not in _FIGURES:
        raise ValueError(f"unknown figure {figure!r}; valid: {', '.join(FIGURE_IDS)}")
    if max_n > MAXN:
        raise ValueError(f"max_n {max_n} exceeds MAXN={MAXN}")
    out: list[FigureMember] = []
    seen: set[bytes] = set()
    for branch in _FIGURES[figure]:
        budget = max_n - branch.base_n
        if budget < 0:
            continue
        vectors: list[tuple[int, ...]]
        if branch.classes:
            vectors = []
            for total in range(budget + 1):
                vectors.extend(_compositions(total, len(branch.classes)))
        else:
            vectors = [()]
        for counts in vectors:
            g = _instantiate(branch, counts)
            cert = canonical_form(g)
            if cert in seen:
                continue
            seen.add(cert)
            params = tuple((name, c) for (name, _), c in zip(branch.classes, counts))
            out.append(FigureMember(figure, branch.label, params, g))
    return tuple(out)


def figure_family(figure: str, max_n: int = 9) -> Family:
    return Family(tuple(m.graph for m in figure_graphs(figure, max_n)))


def corpus_text(figure: str, max_n: int = 9) -> str:
    """Deterministic golden-file text for one figure family."""
    members = figure_graphs(figure, max_n)
    lines = [f"# {figure}: {len(members)} members, max {max_n} vertices"]
    for m in members:
        tag = " ".join(f"{k}={v}" for k, v in m.params)
        lines.append(f"# {m.label}" + (f" {tag}" if tag else ""))
        lines.append(write_graph6(m.graph))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# recognizers
# ---------------------------------------------------------------------------

_SPLIT_FORBIDDEN = Family(
    (named("2k2"), named("c4"), named("c5"))
)
_PSEUDO_SPLIT_FORBIDDEN = Family((named("2k2"), named("c4")))
_THRESHOLD_FORBIDDEN = Family((named("2k2"), named("p4"), named("c4")))


def _split_by_splittance(g: Graph) -> bool:
    """Degree-sequence test: split iff the split inequality is tight."""
    d = sorted(g.degrees(), reverse=True)
    m = 0
    for k in range(1, g.n + 1):
        if d[k - 1] >= k - 1:
            m = k
    return sum(d[:m]) == m * (m - 1) + sum(d[m:])


def _threshold_by_elimination(g: Graph) -> bool:
    """Strip isolated or dominating vertices until nothing is left."""
    n = g.n
    alive = (1 << n) - 1
    rows = list(g.adj)
    remaining = n
    while remaining:
        pick = -1
        for v in range(n):
            if not alive >> v & 1:
                continue
            deg_row = rows[v] & alive
            if deg_row == 0 or deg_row == alive & ~(1 << v):
                pick = v
                break
        if pick < 0:
            return False
        alive &= ~(1 << pick)
        remaining -= 1
    return True


def is_split(g: Graph, method: str = "forbidden") -> bool:
    """Split recognition: forbidden-subgraph route or splittance oracle."""
    if method == "forbidden":
        return is_h_free(g, _SPLIT_FORBIDDEN)
    if method == "splittance":
        return _split_by_splittance(g)
    raise ValueError(f"unknown method {method!r}")


def is_pseudo_split(g: Graph) -> bool:
    return is_h_free(g, _PSEUDO_SPLIT_FORBIDDEN)


def is_threshold(g: Graph, method: str = "forbidden") -> bool:
    """Threshold recognition: forbidden-subgraph route or elimination oracle."""
    if method == "forbidden":
        return is_h_free(g, _THRESHOLD_FORBIDDEN)
    if method == "elimination":
        return _threshold_by_elimination(g)
    raise ValueError(f"unknown method {method!r}")
