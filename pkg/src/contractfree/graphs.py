"""Immutable small graphs over bitmask adjacency rows.

Vertices are 0..n-1 and each adjacency row is an int whose bit v says
whether that vertex is adjacent to v. Everything here assumes simple
undirected graphs with at most MAXN vertices, which keeps every row in
a machine word and makes subset tests single AND operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAXN = 12

_G6_HEADER_MIN = 63
_G6_HEADER_MAX = 126


class Graph6Error(ValueError):
    """Raised when graph6 text cannot be decoded."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _drop_bit(mask: int, b: int) -> int:
    """Remove bit position b from mask, shifting higher bits down one."""
    return (mask & ((1 << b) - 1)) | ((mask >> (b + 1)) << b)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1.

    adj[v] is the neighbour bitmask of v. Instances are immutable and
    hashable, so they can key caches directly.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAXN:
            raise ValueError(f"vertex count {self.n} outside 0..{MAXN}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"vertex {v} is self-adjacent")
        for v in range(self.n):
            for u in range(v):
                if (self.adj[v] >> u & 1) != (self.adj[u] >> v & 1):
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def degree(self, v: int) -> int:
        return _popcount(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(_popcount(row) for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return _bits(self.adj[v])

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for v in range(self.n):
            row = self.adj[v] >> (v + 1) << (v + 1)
            for u in _bits(row):
                out.append((v, u))
        return tuple(out)

    @property
    def edge_count(self) -> int:
        return sum(_popcount(row) for row in self.adj) // 2

    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if not self.adj[v])

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph({self.n}, edges={list(self.edges())})"


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------

def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a Graph.

    Strict by design: the optional format header, out-of-range body
    characters, wrong body length and nonzero padding bits are all
    rejected with distinct messages rather than patched over.
    """
    line = text.strip("\r\n")
    if line.startswith(">>graph6<<"):
        raise Graph6Error("format header '>>graph6<<' is not accepted; pass the bare encoding")
    if not line:
        raise Graph6Error("empty graph6 input: missing order byte")
    head = ord(line[0])
    if head == 126:
        raise Graph6Error(f"multi-byte order encoding implies more than {MAXN} vertices (MAXN={MAXN})")
    if not _G6_HEADER_MIN <= head < _G6_HEADER_MAX:
        raise Graph6Error(f"order byte {line[0]!r} outside the graph6 range")
    n = head - 63
    if n > MAXN:
        raise Graph6Error(f"graph order {n} exceeds MAXN={MAXN}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = line[1:]
    if len(body) != need:
        raise Graph6Error(f"graph6 body has {len(body)} bytes, expected {need} for order {n}")
    acc = 0
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"graph6 body character {ch!r} out of range")
        acc = (acc << 6) | val
    pad = 6 * need - nbits
    if acc & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits in graph6 body")
    rows = [0] * n
    pos = nbits
    for col in range(1, n):
        for rowi in range(col):
            pos -= 1
            if acc >> (pos + pad) & 1:
                rows[rowi] |= 1 << col
                rows[col] |= 1 << rowi
    return Graph(n, tuple(rows))


def write_graph6(g: Graph) -> str:
    """Encode a Graph as a single graph6 line (no trailing newline)."""
    pieces = [chr(g.n + 63)]
    buf = 0
    nbuf = 0
    for col in range(1, g.n):
        for rowi in range(col):
            buf = (buf << 1) | (g.adj[rowi] >> col & 1)
            nbuf += 1
            if nbuf == 6:
                pieces.append(chr(buf + 63))
                buf = 0
                nbuf = 0
    if nbuf:
        pieces.append(chr((buf << (6 - nbuf)) + 63))
    return "".join(pieces)


# ---------------------------------------------------------------------------
# basic operations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ContractionResult:
    """Outcome of contracting one edge.

    mapping[old_vertex] gives the new label; both endpoints map to
    merged. The merged vertex sits at min(u, v) and labels above
    max(u, v) shift down by one.
    """

    graph: Graph
    merged: int
    mapping: tuple[int, ...]


def contract(g: Graph, u: int, v: int) -> ContractionResult:
    """Contract edge uv: merge the endpoints and drop any parallel edge."""
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
        raise ValueError(f"({u}, {v}) is not a vertex pair of the graph")
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    a, b = (u, v) if u < v else (v, u)
    rows = []
    uv_bits = (1 << a) | (1 << b)
    for x in range(g.n):
        if x == b:
            continue
        if x == a:
            row = (g.adj[a] | g.adj[b]) & ~uv_bits
        else:
            row = g.adj[x]
            if row & uv_bits:
                row = (row & ~uv_bits) | (1 << a)
        rows.append(_drop_bit(row, b))
    mapping = tuple(a if x in (a, b) else (x if x < b else x - 1) for x in range(g.n))
    return ContractionResult(Graph(g.n - 1, tuple(rows)), a, mapping)


def _contract_adj(adj: Sequence[int], u: int, v: int) -> tuple[int, ...]:
    """Row-level contraction for hot loops; assumes uv is an edge."""
    a, b = (u, v) if u < v else (v, u)
    uv_bits = (1 << a) | (1 << b)
    rows = []
    for x in range(len(adj)):
        if x == b:
            continue
        if x == a:
            row = (adj[a] | adj[b]) & ~uv_bits
        else:
            row = adj[x]
            if row & uv_bits:
                row = (row & ~uv_bits) | (1 << a)
        rows.append(_drop_bit(row, b))
    return tuple(rows)


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on the given vertices, kept in ascending order."""
    picked = tuple(vertices)
    vs = sorted(set(picked))
    if len(vs) != len(picked):
        raise ValueError("duplicate vertices in induced-subgraph selection")
    for x in vs:
        if not 0 <= x < g.n:
            raise ValueError(f"vertex {x} outside 0..{g.n - 1}")
    rows = []
    for x in vs:
        row = 0
        for j, y in enumerate(vs):
            if g.adj[x] >> y & 1:
                row |= 1 << j
        rows.append(row)
    return Graph(len(vs), tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((~row & full & ~(1 << v)) for v, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAXN:
        raise ValueError(f"union order {g.n + h.n} exceeds MAXN={MAXN}")
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


def permuted(g: Graph, mapping: Sequence[int]) -> Graph:
    """Relabel: mapping[old] = new. mapping must be a permutation of 0..n-1."""
    if sorted(mapping) != list(range(g.n)):
        raise ValueError("mapping is not a permutation of the vertex set")
    rows = [0] * g.n
    for old in range(g.n):
        new_row = 0
        for nb in _bits(g.adj[old]):
            new_row |= 1 << mapping[nb]
        rows[mapping[old]] = new_row
    return Graph(g.n, tuple(rows))


def neighborhood(g: Graph, vertices: int | Iterable[int], closed: bool = False) -> frozenset[int]:
    """Open or closed neighbourhood of a vertex or vertex set."""
    vs = (vertices,) if isinstance(vertices, int) else tuple(vertices)
    mask = 0
    sel = 0
    for v in vs:
        mask |= g.adj[v]
        sel |= 1 << v
    mask = (mask | sel) if closed else (mask & ~sel)
    return frozenset(_bits(mask))


def corner_dominated(g: Graph, u: int, v: int) -> bool:
    """True when u is a corner dominated by v: N[u] is contained in N[v]."""
    if u == v:
        raise ValueError("corner domination needs two distinct vertices")
    nu = g.adj[u] | (1 << u)
    nv = g.adj[v] | (1 << v)
    return nu & ~nv == 0


# ---------------------------------------------------------------------------
# isomorphism and canonical form
# ---------------------------------------------------------------------------

def _profiles(g: Graph) -> list[tuple]:
    degs = [(_popcount(row)) for row in g.adj]
    out = []
    for v in range(g.n):
        nd = sorted(degs[u] for u in _bits(g.adj[v]))
        tri = sum(_popcount(g.adj[v] & g.adj[u]) for u in _bits(g.adj[v])) // 2
        out.append((degs[v], tri, tuple(nd)))
    return out


def _iso_map(g: Graph, h: Graph, fix: dict[int, int] | None = None) -> list[int] | None:
    """Find an adjacency-preserving bijection g -> h, or None.

    Candidate masks are narrowed by forward checking: assigning one
    image constrains every unmapped vertex to match its adjacency with
    the new pair.
    """
    n = g.n
    if n != h.n:
        return None
    pg, ph = _profiles(g), _profiles(h)
    if sorted(pg) != sorted(ph):
        return None
    full = (1 << n) - 1
    cand = []
    for vg in range(n):
        m = 0
        for vh in range(n):
            if pg[vg] == ph[vh]:
                m |= 1 << vh
        if fix and vg in fix:
            m &= 1 << fix[vg]
        if not m:
            return None
        cand.append(m)
    order = sorted(range(n), key=lambda v: (_popcount(cand[v]), -_popcount(g.adj[v])))
    image = [-1] * n

    def assign(k: int, masks: list[int], used: int) -> bool:
        if k == n:
            return True
        vg = order[k]
        options = masks[vg] & ~used
        while options:
            low = options & -options
            options ^= low
            vh = low.bit_length() - 1
            nxt = list(masks)
            ok = True
            for wg in order[k + 1:]:
                if g.adj[vg] >> wg & 1:
                    m = nxt[wg] & h.adj[vh]
                else:
                    m = nxt[wg] & ~h.adj[vh] & full
                if not m & ~(used | low):
                    ok = False
                    break
                nxt[wg] = m
            if ok:
                image[vg] = vh
                if assign(k + 1, nxt, used | low):
                    return True
        return False

    if assign(0, cand, 0):
        return image
    return None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    return _iso_map(g, h) is not None


def automorphism_orbits(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Vertex orbits of the automorphism group, each sorted, ordered by minimum."""
    n = g.n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    prof = _profiles(g)
    for u in range(n):
        for v in range(u + 1, n):
            if find(u) == find(v) or prof[u] != prof[v]:
                continue
            perm = _iso_map(g, g, fix={u: v})
            if perm is not None:
                for x in range(n):
                    union(x, perm[x])
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return tuple(tuple(sorted(members)) for _, members in sorted(groups.items()))


def _min_order(g: Graph) -> tuple[int, ...]:
    """Vertex order whose graph6 bit string is lexicographically least.

    Branch and bound over placements: at each depth only vertices whose
    adjacency block against the placed prefix is minimal are viable,
    interchangeable candidates are collapsed, and prefixes that exceed
    the incumbent are cut. Seeing a strictly smaller block invalidates
    the incumbent wholesale.
    """
    n = g.n
    if n <= 1:
        return tuple(range(n))
    adj = g.adj
    best: list[int] | None = None
    best_order: list[int] = list(range(n))
    path: list[int] = []

    def descend(remaining: list[tuple[int, int]], depth: int, cur: list[int]) -> None:
        nonlocal best, best_order
        if not remaining:
            if best is None or cur < best:
                best = cur.copy()
                best_order = path.copy()
            return
        m = min(b for _, b in remaining)
        if best is not None:
            ref = best[depth]
            if m > ref:
                return
            if m < ref:
                best = None
        cur.append(m)
        tried: list[int] = []
        for v, b in remaining:
            if b != m:
                continue
            if any((adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u)) for u in tried):
                continue
            tried.append(v)
            nxt = [(w, (bb << 1) | (adj[w] >> v & 1)) for w, bb in remaining if w != v]
            path.append(v)
            descend(nxt, depth + 1, cur)
            path.pop()
        cur.pop()

    descend([(v, 0) for v in range(n)], 0, [])
    return tuple(best_order)


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabelled copy of g."""
    order = _min_order(g)
    mapping = [0] * g.n
    for pos, old in enumerate(order):
        mapping[old] = pos
    return permuted(g, mapping)


def canonical_form(g: Graph) -> bytes:
    """Certificate: graph6 bytes of the lexicographically least labelling.

    Two graphs are isomorphic exactly when their certificates are equal,
    and parse_graph6(cert) reproduces the canonical copy.
    """
    return write_graph6(canonical_graph(g)).encode("ascii")
