"""Exhaustive generation of small graphs, one per isomorphism class.

Levels are built by vertex augmentation: every representative on n-1
vertices is extended by a new vertex with every possible neighbor set,
and candidates are deduplicated inside invariant buckets by direct
isomorphism tests. A brute-force quotient of all labelled graphs
provides an independent oracle at the bottom of the range.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .graphs import (
    Graph,
    MAXN,
    _popcount,
    _profiles,
    _iso_map,
    canonical_form,
    canonical_graph,
    write_graph6,
)


@dataclass(frozen=True)
class GraphSpace:
    """All isomorphism classes with at most n_max vertices.

    graphs holds canonically labelled representatives sorted by vertex
    count and then by certificate; certs is the parallel certificate
    tuple.
    """

    n_max: int
    exclude_isolated: bool
    graphs: tuple[Graph, ...]
    certs: tuple[bytes, ...]

    def counts(self) -> dict[int, int]:
        out: dict[int, int] = {n: 0 for n in range(self.n_max + 1)}
        for g in self.graphs:
            out[g.n] += 1
        return out

    def __len__(self) -> int:
        return len(self.graphs)


def _augment(parents: list[Graph]) -> list[Graph]:
    """All classes on n vertices from representatives on n - 1."""
    buckets: dict[tuple, list[Graph]] = {}
    for parent in parents:
        n = parent.n + 1
        for mask in range(1 << parent.n):
            rows = tuple(
                row | (1 << (n - 1)) if mask >> v & 1 else row
                for v, row in enumerate(parent.adj)
            ) + (mask,)
            child = Graph(n, rows)
            key = tuple(sorted(_profiles(child)))
            bucket = buckets.setdefault(key, [])
            if not any(_iso_map(child, seen) is not None for seen in bucket):
                bucket.append(child)
    out: list[Graph] = []
    for key in buckets:
        out.extend(buckets[key])
    return out


class SpaceCache:
    """Session cache for enumeration levels and canonical labelling.

    Levels are shared between spaces with different bounds, so asking
    for n_max = 7 after n_max = 8 costs nothing.
    """

    def __init__(self) -> None:
        self._levels: dict[int, list[tuple[Graph, bytes]]] = {}

    def _level(self, n: int) -> list[tuple[Graph, bytes]]:
        if n not in self._levels:
            if n == 0:
                reps = [Graph(0, ())]
            else:
                parents = [g for g, _ in self._level(n - 1)]
                reps = _augment(parents)
            pairs = []
            for g in reps:
                cg = canonical_graph(g)
                pairs.append((cg, write_graph6(cg).encode("ascii")))
            pairs.sort(key=lambda p: p[1])
            self._levels[n] = pairs
        return self._levels[n]

    def space(self, n_max: int, exclude_isolated: bool = False) -> GraphSpace:
        if not 0 <= n_max <= MAXN:
            raise ValueError(f"n_max {n_max} outside 0..{MAXN}")
        graphs: list[Graph] = []
        certs: list[bytes] = []
        for n in range(n_max + 1):
            for g, cert in self._level(n):
                if exclude_isolated and g.isolated_vertices():
                    continue
                graphs.append(g)
                certs.append(cert)
        return GraphSpace(n_max, exclude_isolated, tuple(graphs), tuple(certs))


_DEFAULT_CACHE = SpaceCache()


def enumerate_graphs(n_max: int, exclude_isolated: bool = False,
                     cache: SpaceCache | None = None) -> GraphSpace:
    """One canonical representative per isomorphism class, up to n_max."""
    return (cache or _DEFAULT_CACHE).space(n_max, exclude_isolated)


# ---------------------------------------------------------------------------
# independent oracle
# ---------------------------------------------------------------------------

def brute_force_classes(n: int) -> list[Graph]:
    """Partition all labelled graphs on n vertices by permutation closure.

    Exponential in edges times n!, usable only for tiny n; exists
    purely to validate the augmentation generator.
    """
    if not 0 <= n <= 5:
        raise ValueError("brute force oracle supports n <= 5 only")
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    perms = []
    for sigma in permutations(range(n)):
        perms.append(tuple(index[tuple(sorted((sigma[u], sigma[v])))] for u, v in pairs))
    reps: list[Graph] = []
    seen = bytearray(1 << len(pairs))
    for code in range(1 << len(pairs)):
        if seen[code]:
            continue
        for pm in perms:
            moved = 0
            rest = code
            while rest:
                low = rest & -rest
                rest ^= low
                moved |= 1 << pm[low.bit_length() - 1]
            seen[moved] = 1
        reps.append(Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1]))
    return reps


def brute_force_counts(n_max: int) -> dict[int, int]:
    return {n: len(brute_force_classes(n)) for n in range(n_max + 1)}
