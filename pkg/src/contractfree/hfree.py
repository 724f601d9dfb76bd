"""Forbidden-induced-subgraph machinery around edge contraction.

The module answers four kinds of questions about a graph g and a family
of forbidden patterns:

* does g induce any pattern (freeness, with a deterministic witness);
* which graphs contract onto a pattern (splitting expansions and the
  pattern-free members of those, the free splits);
* does every contraction of g stay pattern-free (strong freeness,
  critical existence);
* which single edges destroy a particular pattern occurrence (critical
  edges, by contraction semantics or by the corner-domination rule).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .graphs import (
    Graph,
    MAXN,
    _bits,
    _contract_adj,
    _popcount,
    automorphism_orbits,
    canonical_form,
    contract,
    corner_dominated,
    induced,
    is_isomorphic,
)

log = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# induced-pattern search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Pattern:
    """Preprocessed search plan for one pattern graph.

    order places a highest-degree vertex first and then greedily
    maximizes back-degree, so candidate masks shrink early. back_adj[d]
    holds the pattern adjacency of order[d] against order[0..d-1].
    """

    k: int
    order: tuple[int, ...]
    back_adj: tuple[int, ...]
    degrees: tuple[int, ...]

    @classmethod
    def build(cls, pattern: Graph) -> "_Pattern":
        k = pattern.n
        degs = pattern.degrees()
        order: list[int] = []
        placed = 0
        for _ in range(k):
            best, best_key = -1, None
            for v in range(k):
                if placed >> v & 1:
                    continue
                key = (_popcount(pattern.adj[v] & placed), degs[v])
                if best_key is None or key > best_key:
                    best, best_key = v, key
            order.append(best)
            placed |= 1 << best
        back = []
        for d, v in enumerate(order):
            mask = 0
            for i in range(d):
                if pattern.adj[v] >> order[i] & 1:
                    mask |= 1 << i
            back.append(mask)
        return cls(k, tuple(order), tuple(back), tuple(degs[v] for v in order))


@lru_cache(maxsize=512)
def _plan(pattern: Graph) -> _Pattern:
    return _Pattern.build(pattern)


def _exists_embedding(adj: Sequence[int], n: int, plan: _Pattern, degs: Sequence[int]) -> bool:
    """Is there an induced copy of the pattern in the host (bitmask rows)?"""
    k = plan.k
    if k > n:
        return False
    full = (1 << n) - 1
    base = []
    for d in range(k):
        need = plan.degrees[d]
        m = 0
        for v in range(n):
            if degs[v] >= need:
                m |= 1 << v
        base.append(m)

    images = [0] * k

    def place(d: int, used: int) -> bool:
        want = plan.back_adj[d]
        cand = base[d] & ~used
        for i in range(d):
            if want >> i & 1:
                cand &= adj[images[i]]
            else:
                cand &= ~adj[images[i]]
        cand &= full
        while cand:
            low = cand & -cand
            cand ^= low
            images[d] = low.bit_length() - 1
            if d + 1 == k or place(d + 1, used | low):
                return True
        return False

    if k == 0:
        return True
    return place(0, 0)


def exists_induced(g: Graph, pattern: Graph) -> bool:
    """True when some vertex subset of g induces the pattern."""
    return _exists_embedding(g.adj, g.n, _plan(pattern), g.degrees())


def _adj_exists(adj: Sequence[int], n: int, pattern: Graph) -> bool:
    degs = [_popcount(r) for r in adj]
    return _exists_embedding(adj, n, _plan(pattern), degs)


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Family:
    """Pairwise non-isomorphic pattern graphs, in construction order."""

    members: tuple[Graph, ...]
    certs: tuple[bytes, ...] = field(repr=False, default=())

    def __post_init__(self) -> None:
        certs = tuple(canonical_form(m) for m in self.members)
        if len(set(certs)) != len(certs):
            raise ValueError("family members must be pairwise non-isomorphic")
        object.__setattr__(self, "certs", certs)

    @classmethod
    def of(cls, graphs: Iterable[Graph], dedup: bool = False) -> "Family":
        seen: dict[bytes, Graph] = {}
        for g in graphs:
            cert = canonical_form(g)
            if cert in seen:
                if not dedup:
                    raise ValueError("family members must be pairwise non-isomorphic")
                continue
            seen[cert] = g
        return cls(tuple(seen.values()))

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g: Graph) -> bool:
        return canonical_form(g) in set(self.certs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return sorted(self.certs) == sorted(other.certs)

    def __hash__(self) -> int:
        return hash(frozenset(self.certs))

    def cert_set(self) -> frozenset[bytes]:
        return frozenset(self.certs)


def family_to_lines(fam: Family, header: str | None = None) -> str:
    """Serialize a family as graph6 lines with an optional # header."""
    from .graphs import write_graph6

    lines = []
    if header:
        lines.append(f"# {header}")
    lines.extend(write_graph6(m) for m in fam)
    return "\n".join(lines) + "\n" if lines else ""


def family_from_lines(text: str, dedup: bool = False) -> Family:
    """Parse graph6 lines into a Family, skipping # comments and blanks."""
    from .graphs import parse_graph6

    graphs = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        graphs.append(parse_graph6(line))
    return Family.of(graphs, dedup=dedup)


# ---------------------------------------------------------------------------
# freeness
# ---------------------------------------------------------------------------

def is_h_free(g: Graph, fam: Family) -> bool:
    """True when no vertex subset of g induces a member of fam."""
    degs = g.degrees()
    return not any(_exists_embedding(g.adj, g.n, _plan(m), degs) for m in fam)


def _adj_is_free(adj: Sequence[int], n: int, fam: Family) -> bool:
    degs = [_popcount(r) for r in adj]
    return not any(_exists_embedding(adj, n, _plan(m), degs) for m in fam)


def find_induced(g: Graph, fam: Family) -> tuple[int, ...] | None:
    """Lexicographically least vertex subset inducing any member, or None.

    Smaller subsets are not preferred: the least subset is taken per
    member size and then the overall least tuple wins, so the answer is
    deterministic regardless of family order.
    """
    best: tuple[int, ...] | None = None
    by_size: dict[int, list[Graph]] = {}
    for m in fam:
        by_size.setdefault(m.n, []).append(m)
    for size, members in sorted(by_size.items()):
        if size > g.n:
            continue
        found = None
        for subset in combinations(range(g.n), size):
            sub = induced(g, subset)
            if any(is_isomorphic(sub, m) for m in members):
                found = subset
                break
        if found is not None and (best is None or found < best):
            best = found
    return best


def elementary(fam: Family) -> Family:
    """Members that contain no other member as a proper induced subgraph.

    Freeness against the reduced family equals freeness against the
    original for every graph.
    """
    keep = []
    for i, m in enumerate(fam.members):
        redundant = any(
            other.n < m.n and exists_induced(m, other)
            for j, other in enumerate(fam.members)
            if i != j
        )
        if not redundant:
            keep.append(m)
    return Family(tuple(keep))


# ---------------------------------------------------------------------------
# splitting (inverse contraction)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SplitSpec:
    """One splitting move: replace vertex in host by an adjacent pair.

    left and right are the neighbor sets handed to the two replacement
    vertices; they must cover N(vertex) and may overlap or be empty.
    """

    host: Graph
    vertex: int
    left: frozenset[int]
    right: frozenset[int]

    def __post_init__(self) -> None:
        if not 0 <= self.vertex < self.host.n:
            raise ValueError(f"vertex {self.vertex} outside the host")
        nbh = frozenset(_bits(self.host.adj[self.vertex]))
        if self.left | self.right != nbh:
            raise ValueError("left and right must cover the split vertex's neighborhood")


def splitting_one(spec: SplitSpec) -> Graph:
    """Apply one splitting move.

    The result keeps the host's other vertices first (compacted in
    order), then the left replacement vertex, then the right one; the
    two replacements are adjacent to each other.
    """
    h, v = spec.host, spec.vertex
    old = [x for x in range(h.n) if x != v]
    pos = {x: i for i, x in enumerate(old)}
    n = h.n + 1
    iu, iw = n - 2, n - 1
    rows = [0] * n
    for x in old:
        row = 0
        for nb in _bits(h.adj[x]):
            if nb != v:
                row |= 1 << pos[nb]
        rows[pos[x]] = row
    for member in spec.left:
        rows[iu] |= 1 << pos[member]
        rows[pos[member]] |= 1 << iu
    for member in spec.right:
        rows[iw] |= 1 << pos[member]
        rows[pos[member]] |= 1 << iw
    rows[iu] |= 1 << iw
    rows[iw] |= 1 << iu
    return Graph(n, tuple(rows))


def splitting_vertex(h: Graph, v: int) -> Family:
    """All splittings of h at v, deduplicated up to isomorphism.

    Every ordered cover (left, right) of N(v) is enumerated, each
    neighbor going left, right, or both; covers are allowed to leave
    one side empty.
    """
    if not 0 <= v < h.n:
        raise ValueError(f"vertex {v} outside the host")
    nbs = list(_bits(h.adj[v]))
    if not nbs:
        raise ValueError(f"vertex {v} is isolated; splitting needs at least one neighbor")
    if h.n + 1 > MAXN:
        raise ValueError(f"splitting would exceed MAXN={MAXN}")
    out: dict[bytes, Graph] = {}
    for code in range(3 ** len(nbs)):
        left, right = set(), set()
        c = code
        for x in nbs:
            c, r = divmod(c, 3)
            if r == 0:
                left.add(x)
            elif r == 1:
                right.add(x)
            else:
                left.add(x)
                right.add(x)
        g = splitting_one(SplitSpec(h, v, frozenset(left), frozenset(right)))
        cert = canonical_form(g)
        if cert not in out:
            out[cert] = g
    return Family(tuple(out.values()))


def splitting_graph(h: Graph) -> Family:
    """Union of splitting_vertex over one representative per vertex orbit.

    Vertices in a common automorphism orbit yield identical splitting
    sets, so only orbit minima are expanded. Isolated vertices cannot
    be split and their orbits are skipped with a log message.
    """
    out: dict[bytes, Graph] = {}
    for orbit in automorphism_orbits(h):
        rep = orbit[0]
        if not h.adj[rep]:
            log.warning("skipping isolated-vertex orbit %s of %r", orbit, h)
            continue
        for g in splitting_vertex(h, rep):
            cert = canonical_form(g)
            if cert not in out:
                out[cert] = g
    return Family(tuple(out.values()))


def splitting_family(fam: Family) -> Family:
    """Union of splitting_graph over the family, deduplicated."""
    out: dict[bytes, Graph] = {}
    for member in fam:
        for g in splitting_graph(member):
            cert = canonical_form(g)
            if cert not in out:
                out[cert] = g
    return Family(tuple(out.values()))


def free_splits(fam: Family) -> Family:
    """Members of splitting_family(fam) that are themselves fam-free."""
    return Family(tuple(g for g in splitting_family(fam) if is_h_free(g, fam)))


# ---------------------------------------------------------------------------
# contraction stability
# ---------------------------------------------------------------------------

def _edges_of(adj: Sequence[int]) -> Iterator[tuple[int, int]]:
    for v in range(len(adj)):
        row = adj[v] >> (v + 1) << (v + 1)
        while row:
            low = row & -row
            row ^= low
            yield v, low.bit_length() - 1


def _all_contractions_free(adj: Sequence[int], fam: Family) -> bool:
    for u, v in _edges_of(adj):
        if not _adj_is_free(_contract_adj(adj, u, v), len(adj) - 1, fam):
            return False
    return True


def is_strongly_h_free(g: Graph, fam: Family, method: str = "contractions") -> bool:
    """For a fam-free graph: does every single-edge contraction stay free?

    method "contractions" checks each contraction directly; method
    "free_splits" tests freeness against free_splits(fam) instead. The
    two agree everywhere and the test suite asserts it.
    """
    if not is_h_free(g, fam):
        raise ValueError("graph must be fam-free for strong freeness")
    if method == "contractions":
        return _all_contractions_free(g.adj, fam)
    if method == "free_splits":
        return is_h_free(g, free_splits(fam))
    raise ValueError(f"unknown method {method!r}")


def _critically_exist(adj: Sequence[int], n: int, fam: Family) -> bool:
    return not _adj_is_free(adj, n, fam) and _all_contractions_free(adj, fam)


def is_critically_h_exist(g: Graph, fam: Family) -> bool:
    """fam-exist, yet every single-edge contraction is fam-free.

    Inputs with isolated vertices are rejected rather than silently
    stripped; the convention underlying the figure families excludes
    them.
    """
    if g.isolated_vertices():
        raise ValueError("graph has isolated vertices; strip them before the criticality test")
    return _critically_exist(g.adj, g.n, fam)


# ---------------------------------------------------------------------------
# critical edges
# ---------------------------------------------------------------------------

def contract_subset(g: Graph, e: tuple[int, int], s: Iterable[int]) -> frozenset[int]:
    """Image of vertex set s in contract(g, e).

    When either endpoint lies in s the merged vertex replaces both;
    otherwise s is merely relabeled. Size drops by one exactly when
    both endpoints are in s.
    """
    res = contract(g, *e)
    return frozenset(res.mapping[x] for x in s)


@dataclass(frozen=True)
class CriticalEdgeQuery:
    """One criticality question: does contracting edge destroy g[subset]?"""

    g: Graph
    subset: frozenset[int]
    edge: tuple[int, int]

    def __post_init__(self) -> None:
        u, v = self.edge
        if not self.g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        for x in self.subset:
            if not 0 <= x < self.g.n:
                raise ValueError(f"subset vertex {x} outside the graph")


def is_h_critical_for(q: CriticalEdgeQuery, method: str = "contraction") -> bool:
    """Does contracting the edge change the subset's induced pattern?

    method "contraction" compares the contracted image against the
    original induced subgraph. method "corners" evaluates the
    equivalent structural rule: critical iff both endpoints are inside
    the subset, or the outside endpoint fails to be a corner dominated
    by the inside endpoint within g[subset + outside endpoint].
    """
    g, s, (u, v) = q.g, q.subset, q.edge
    if method == "contraction":
        pattern = induced(g, s)
        res = contract(g, u, v)
        image = frozenset(res.mapping[x] for x in s)
        return not is_isomorphic(induced(res.graph, image), pattern)
    if method == "corners":
        u_in, v_in = u in s, v in s
        if u_in and v_in:
            return True
        if not u_in and not v_in:
            return False
        outside, inside = (u, v) if v_in else (v, u)
        sub = sorted(s | {outside})
        pos = {x: i for i, x in enumerate(sub)}
        local = induced(g, sub)
        return not corner_dominated(local, pos[outside], pos[inside])
    raise ValueError(f"unknown method {method!r}")


def is_h_critical_in(g: Graph, pattern: Graph, e: tuple[int, int], method: str = "contraction") -> bool:
    """Is the edge critical for every subset inducing the pattern?

    Vacuously true when no subset induces it.
    """
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    for subset in combinations(range(g.n), pattern.n):
        if not is_isomorphic(induced(g, subset), pattern):
            continue
        q = CriticalEdgeQuery(g, frozenset(subset), e)
        if not is_h_critical_for(q, method=method):
            return False
    return True


def is_almost_dominating(g: Graph, e: tuple[int, int]) -> bool:
    """Do the vertices outside N[{u, v}] form an independent set?"""
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    covered = g.adj[u] | g.adj[v] | (1 << u) | (1 << v)
    rest = [x for x in range(g.n) if not covered >> x & 1]
    return all(not g.adj[x] >> y & 1 for x in rest for y in rest if y > x)


# ---------------------------------------------------------------------------
# characterization checks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CharacterizationResult:
    applies: bool
    holds: bool | None


def characterization_check(g: Graph, fam: Family) -> CharacterizationResult:
    """Conditional stability statement for one graph.

    applies when g avoids the family's free splits and is not
    critically fam-exist. In that case holds reports whether freeness
    of g coincides with freeness of all its contractions (expected:
    always true). holds is None when the hypothesis fails.
    """
    applies = is_h_free(g, free_splits(fam)) and not _critically_exist(g.adj, g.n, fam)
    if not applies:
        return CharacterizationResult(False, None)
    free_now = is_h_free(g, fam)
    free_after = _all_contractions_free(g.adj, fam)
    return CharacterizationResult(True, free_now == free_after)


def unique_2k2_criticality_check(g: Graph) -> CharacterizationResult:
    """Sufficiency of unique-occurrence criticality for two disjoint edges.

    applies when exactly one vertex subset induces the two-independent-
    edges pattern and every edge of g is critical for it; holds then
    reports whether g is critically exist for that pattern (expected:
    always true).
    """
    pattern = Graph.from_edges(4, [(0, 1), (2, 3)])
    hits = [s for s in combinations(range(g.n), 4) if is_isomorphic(induced(g, s), pattern)]
    if len(hits) != 1:
        return CharacterizationResult(False, None)
    s = frozenset(hits[0])
    for e in g.edges():
        if not is_h_critical_for(CriticalEdgeQuery(g, s, e)):
            return CharacterizationResult(False, None)
    fam = Family((pattern,))
    return CharacterizationResult(True, _critically_exist(g.adj, g.n, fam))
