"""Registry of verifiable structural claims and the harness to run them.

Every claim replays one published statement about contraction-stable
graph families over an exhaustively enumerated space of small graphs
(or over generated family instances) and reports the witnesses of any
violation. All claims are expected to pass; a failure means either a
transcription bug or a genuine counterexample, and the report keeps the
evidence either way.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .enumeration import GraphSpace, SpaceCache, brute_force_classes
from .families import figure_graphs, is_split, is_threshold, named
from .graphs import (
    Graph,
    _bits,
    _contract_adj,
    canonical_form,
    corner_dominated,
    disjoint_union,
    induced,
    parse_graph6,
    write_graph6,
)
from .hfree import (
    CriticalEdgeQuery,
    Family,
    SplitSpec,
    _adj_is_free,
    _all_contractions_free,
    _critically_exist,
    _edges_of,
    elementary,
    exists_induced,
    free_splits,
    is_almost_dominating,
    is_h_critical_for,
    is_h_free,
    splitting_family,
    splitting_graph,
    splitting_one,
    splitting_vertex,
    unique_2k2_criticality_check,
)

MAX_WITNESSES = 100


# ---------------------------------------------------------------------------
# report plumbing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VerificationReport:
    claim_id: str
    statement: str
    params: dict
    checked: int
    counterexamples: tuple[str, ...]
    elapsed: float

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        pieces = [
            f"{status} {self.claim_id}: {self.statement}",
            f"     checked={self.checked} elapsed={self.elapsed:.2f}s params={json.dumps(self.params, sort_keys=True)}",
        ]
        for w in self.counterexamples:
            pieces.append(f"     counterexample: {w}")
        return "\n".join(pieces)

    def to_record(self) -> str:
        return json.dumps(
            {
                "claim": self.claim_id,
                "status": "pass" if self.passed else "fail",
                "statement": self.statement,
                "params": self.params,
                "checked": self.checked,
                "counterexamples": list(self.counterexamples),
                "elapsed": round(self.elapsed, 3),
            },
            sort_keys=True,
        )


@dataclass
class RunContext:
    """Per-run state: the enumeration cache plus cross-claim memos."""

    cache: SpaceCache
    n_override: int | None = None
    workers: int = 1
    memo: dict = field(default_factory=dict)

    def bound(self, default: int) -> int:
        return self.n_override if self.n_override is not None else default

    def space(self, n_max: int, exclude_isolated: bool = True) -> GraphSpace:
        return self.cache.space(n_max, exclude_isolated)


@dataclass(frozen=True)
class Claim:
    claim_id: str
    statement: str
    fn: Callable[[RunContext], tuple[dict, int, list[str]]]

    def run(self, ctx: RunContext) -> VerificationReport:
        start = time.perf_counter()
        params, checked, witnesses = self.fn(ctx)
        elapsed = time.perf_counter() - start
        return VerificationReport(
            self.claim_id,
            self.statement,
            params,
            checked,
            tuple(witnesses[:MAX_WITNESSES]),
            elapsed,
        )


REGISTRY: dict[str, Claim] = {}


def _claim(claim_id: str, statement: str):
    def deco(fn):
        REGISTRY[claim_id] = Claim(claim_id, statement, fn)
        return fn

    return deco


def verify(
    claim_ids: str | Sequence[str] = "all",
    n_max: int | None = None,
    workers: int = 1,
    cache: SpaceCache | None = None,
) -> list[VerificationReport]:
    """Run registered claims and return their reports in registry order."""
    if claim_ids == "all":
        picked = list(REGISTRY)
    else:
        picked = [claim_ids] if isinstance(claim_ids, str) else list(claim_ids)
        for cid in picked:
            if cid not in REGISTRY:
                raise ValueError(f"unknown claim {cid!r}; known: {', '.join(REGISTRY)}")
    ctx = RunContext(cache or SpaceCache(), n_max, workers)
    return [REGISTRY[cid].run(ctx) for cid in picked]


# ---------------------------------------------------------------------------
# parallel scan helper
# ---------------------------------------------------------------------------
#
# Scan functions map one graph to an int (0 = not flagged). They live at
# module level so worker processes can import them by name; arguments
# are plain tuples so they pickle cheaply.

@lru_cache(maxsize=256)
def _graphs_from_blob(blob: tuple) -> tuple[Graph, ...]:
    return tuple(Graph(n, adj) for n, adj in blob)


@lru_cache(maxsize=256)
def _fam_from_blob(blob: tuple) -> Family:
    return Family(_graphs_from_blob(blob))


def _to_blob(graphs: Iterable[Graph]) -> tuple:
    return tuple((g.n, g.adj) for g in graphs)


def _scan_chunk(fn_name: str, chunk: list[tuple[int, int, tuple, bytes]], args: tuple) -> list[tuple[int, int]]:
    fn = _SCAN_FNS[fn_name]
    out = []
    for idx, n, adj, cert in chunk:
        value = fn(Graph(n, adj), cert, args)
        if value:
            out.append((idx, value))
    return out


def _scan(ctx: RunContext, space: GraphSpace, fn_name: str, args: tuple) -> dict[int, int]:
    """Apply a scan function to every graph; returns {index: nonzero value}."""
    items = [
        (i, g.n, g.adj, space.certs[i]) for i, g in enumerate(space.graphs)
    ]
    if ctx.workers <= 1:
        fn = _SCAN_FNS[fn_name]
        return {
            i: v
            for i, n, adj, cert in items
            if (v := fn(Graph(n, adj), cert, args))
        }
    chunk_size = max(1, (len(items) + ctx.workers * 4 - 1) // (ctx.workers * 4))
    chunks = [items[i : i + chunk_size] for i in range(0, len(items), chunk_size)]
    flagged: dict[int, int] = {}
    with ProcessPoolExecutor(max_workers=ctx.workers) as pool:
        for part in pool.map(_scan_chunk, [fn_name] * len(chunks), chunks, [args] * len(chunks)):
            flagged.update(part)
    return flagged


# scan functions ------------------------------------------------------------

def _sf_crit_mask(g: Graph, cert: bytes, args: tuple) -> int:
    """Bit i set when g is critically exist for the i-th family in args."""
    contractions: list[tuple[int, ...]] | None = None
    mask = 0
    for i, blob in enumerate(args):
        fam = _fam_from_blob(blob)
        if _adj_is_free(g.adj, g.n, fam):
            continue
        if contractions is None:
            contractions = [_contract_adj(g.adj, u, v) for u, v in _edges_of(g.adj)]
        if all(_adj_is_free(c, g.n - 1, fam) for c in contractions):
            mask |= 1 << i
    return mask


def _sf_bicond_violation(g: Graph, cert: bytes, args: tuple) -> int:
    fam_blob, hyp_blob, exception_certs = args
    if cert in exception_certs:
        return 0
    if any(exists_induced(g, h) for h in _graphs_from_blob(hyp_blob)):
        return 0
    fam = _fam_from_blob(fam_blob)
    return int(is_h_free(g, fam) != _all_contractions_free(g.adj, fam))


def _sf_key_disagree(g: Graph, cert: bytes, args: tuple) -> int:
    fam_blob, fs_blob = args
    fam = _fam_from_blob(fam_blob)
    if not is_h_free(g, fam):
        return 0
    direct = _all_contractions_free(g.adj, fam)
    via_fs = _adj_is_free(g.adj, g.n, _fam_from_blob(fs_blob)) if fs_blob else True
    return int(direct != via_fs)


def _sf_characterization(g: Graph, cert: bytes, args: tuple) -> int:
    fam_blob, fs_blob = args
    fam = _fam_from_blob(fam_blob)
    if fs_blob and not _adj_is_free(g.adj, g.n, _fam_from_blob(fs_blob)):
        return 0
    if _critically_exist(g.adj, g.n, fam):
        return 0
    return int(is_h_free(g, fam) != _all_contractions_free(g.adj, fam))


@lru_cache(maxsize=8)
def _pattern_certs(patterns_blob: tuple) -> frozenset[bytes]:
    return frozenset(canonical_form(p) for p in _graphs_from_blob(patterns_blob))


def _sf_edge_crit_disagree(g: Graph, cert: bytes, args: tuple) -> int:
    (patterns_blob,) = args
    edges = list(_edges_of(g.adj))
    if not edges:
        return 0
    pattern_certs = _pattern_certs(patterns_blob)
    sizes = sorted({p.n for p in _graphs_from_blob(patterns_blob)})
    for size in sizes:
        if size > g.n:
            continue
        for subset in combinations(range(g.n), size):
            if canonical_form(induced(g, subset)) not in pattern_certs:
                continue
            s = frozenset(subset)
            for e in edges:
                q = CriticalEdgeQuery(g, s, e)
                if is_h_critical_for(q, "contraction") != is_h_critical_for(q, "corners"):
                    return 1
    return 0


def _sf_almost_dom_disagree(g: Graph, cert: bytes, args: tuple) -> int:
    fam = _fam_from_blob(args[0])
    free = is_h_free(g, fam)
    all_ad = all(is_almost_dominating(g, e) for e in _edges_of(g.adj))
    return int(free != all_ad)


def _sf_unique_2k2(g: Graph, cert: bytes, args: tuple) -> int:
    result = unique_2k2_criticality_check(g)
    return int(result.applies and not result.holds)


def _sf_split_oracle(g: Graph, cert: bytes, args: tuple) -> int:
    return int(is_split(g) != is_split(g, "splittance"))


def _sf_threshold_oracle(g: Graph, cert: bytes, args: tuple) -> int:
    return int(is_threshold(g) != is_threshold(g, "elimination"))


def _sf_split_not_closed(g: Graph, cert: bytes, args: tuple) -> int:
    if not is_split(g):
        return 0
    fam = _fam_from_blob(args[0])
    return int(not _all_contractions_free(g.adj, fam))


def _sf_cycle_contraction(g: Graph, cert: bytes, args: tuple) -> int:
    cycle_blob, smaller_blob = args
    big = _fam_from_blob((cycle_blob,))
    small = _fam_from_blob((smaller_blob,))
    if _adj_is_free(g.adj, g.n, big):
        return 0
    for u, v in _edges_of(g.adj):
        if not _adj_is_free(_contract_adj(g.adj, u, v), g.n - 1, small):
            return 0
    return 1


def _sf_membership_disagree(g: Graph, cert: bytes, args: tuple) -> int:
    pattern_cert, split_certs = args
    has_contr = any(
        canonical_form(Graph(g.n - 1, _contract_adj(g.adj, u, v))) == pattern_cert
        for u, v in _edges_of(g.adj)
    )
    return int(has_contr != (cert in split_certs))


_SCAN_FNS: dict[str, Callable] = {
    "crit_mask": _sf_crit_mask,
    "bicond": _sf_bicond_violation,
    "key": _sf_key_disagree,
    "characterization": _sf_characterization,
    "edge_crit": _sf_edge_crit_disagree,
    "almost_dom": _sf_almost_dom_disagree,
    "unique_2k2": _sf_unique_2k2,
    "split_oracle": _sf_split_oracle,
    "threshold_oracle": _sf_threshold_oracle,
    "split_closed": _sf_split_not_closed,
    "cycle_contraction": _sf_cycle_contraction,
    "membership": _sf_membership_disagree,
}


# ---------------------------------------------------------------------------
# shared family tables
# ---------------------------------------------------------------------------

def _single(name: str) -> Family:
    return Family((named(name),))


def _fam(*names: str) -> Family:
    return Family(tuple(named(n) for n in names))


# The eight figure-backed critical classes plus the triangle.
EC_TABLE: tuple[tuple[str, str, tuple[str, ...]], ...] = (
    ("ec_claw_figure", "fig2", ("claw",)),
    ("ec_2k2_figure", "fig4", ("2k2",)),
    ("ec_p4_figure", "fig6", ("p4",)),
    ("ec_c4_figure", "fig7", ("c4",)),
    ("ec_c5_figure", "fig9", ("c5",)),
    ("ec_split_figure", "fig10", ("2k2", "c4", "c5")),
    ("ec_pseudo_split_figure", "fig11", ("2k2", "c4")),
    ("ec_threshold_figure", "fig12", ("2k2", "p4", "c4")),
)

BICOND_TABLE: tuple[tuple[str, tuple[str, ...], tuple[str, ...], str], ...] = (
    # claim id, family, hypothesis freeness patterns, exception figure
    ("bicond_claw", ("claw",), ("bull",), "fig2"),
    ("bicond_2k2", ("2k2",), (), "fig4"),
    ("bicond_p4", ("p4",), (), "fig6"),
    ("bicond_c4", ("c4",), ("c5",), "fig7"),
    ("bicond_c5", ("c5",), ("c6",), "fig9"),
    ("bicond_split", ("2k2", "c4", "c5"), (), "fig10"),
    ("bicond_pseudo_split", ("2k2", "c4"), ("c5",), "fig11"),
    ("bicond_threshold", ("2k2", "p4", "c4"), ("c5",), "fig12"),
)


def _crit_sets(ctx: RunContext, n_max: int) -> dict[str, frozenset[bytes]]:
    """Certificates of critically-exist graphs per family, one shared pass."""
    key = ("crit_sets", n_max)
    if key not in ctx.memo:
        fam_names = [row[2] for row in EC_TABLE] + [("c3",)]
        blobs = tuple(_to_blob(_fam(*names)) for names in fam_names)
        space = ctx.space(n_max)
        flagged = _scan(ctx, space, "crit_mask", blobs)
        sets: dict[str, frozenset[bytes]] = {}
        for i, names in enumerate(fam_names):
            sets[",".join(names)] = frozenset(
                space.certs[idx] for idx, mask in flagged.items() if mask >> i & 1
            )
        ctx.memo[key] = sets
    return ctx.memo[key]


def _figure_certs(figure: str, n_max: int) -> frozenset[bytes]:
    return frozenset(
        canonical_form(m.graph) for m in figure_graphs(figure, 9) if m.graph.n <= n_max
    )


def _decode(certs: Iterable[bytes]) -> list[str]:
    return sorted(c.decode("ascii") for c in certs)


# ---------------------------------------------------------------------------
# claims: enumeration and splitting basics
# ---------------------------------------------------------------------------

@_claim(
    "enum_counts",
    "Isomorphism-class counts from the augmentation generator match the brute-force quotient of labelled graphs for every order up to 5.",
)
def _c_enum_counts(ctx: RunContext):
    n_max = min(ctx.bound(5), 5)
    space = ctx.cache.space(n_max, exclude_isolated=False)
    counts = space.counts()
    witnesses = []
    checked = 0
    for n in range(n_max + 1):
        reps = brute_force_classes(n)
        checked += len(reps)
        if counts.get(n, 0) != len(reps):
            witnesses.append(f"n={n}: generator {counts.get(n, 0)} vs oracle {len(reps)}")
        gen_certs = {c for g, c in zip(space.graphs, space.certs) if g.n == n}
        oracle_certs = {canonical_form(g) for g in reps}
        for cert in sorted(gen_certs ^ oracle_certs):
            witnesses.append(cert.decode("ascii"))
    return {"n_max": n_max}, checked, witnesses


@_claim(
    "elementary_members",
    "Dropping family members that contain another member as induced subgraph never changes which graphs are family-free.",
)
def _c_elementary(ctx: RunContext):
    n_max = ctx.bound(6)
    space = ctx.space(n_max, exclude_isolated=False)
    test_families = [
        _fam("p3", "p4"),
        _fam("claw", "k1,4"),
        _fam("2k2", "c4", "c5"),
        _fam("k3", "paw", "diamond"),
        _fam("p4", "house", "gem"),
    ]
    witnesses = []
    checked = 0
    for fam in test_families:
        reduced = elementary(fam)
        if elementary(reduced) != reduced:
            witnesses.append(f"idempotence broke on {[write_graph6(m) for m in fam]}")
        for g in space.graphs:
            checked += 1
            if is_h_free(g, fam) != is_h_free(g, reduced):
                witnesses.append(write_graph6(g))
    return {"n_max": n_max, "families": len(test_families)}, checked, witnesses


def _splitting_figure_claim(ctx: RunContext, source: str, figure: str):
    got = splitting_graph(named(source))
    want_members = figure_graphs(figure, 9)
    want = Family(tuple(m.graph for m in want_members))
    witnesses = []
    if got != want:
        witnesses = _decode(got.cert_set() ^ want.cert_set())
    return {"source": source, "figure": figure}, len(got), witnesses


@_claim(
    "splitting_claw_figure",
    "The splitting expansions of the claw are exactly the six recorded claw-split graphs.",
)
def _c_split_claw(ctx: RunContext):
    return _splitting_figure_claim(ctx, "claw", "fig1")


@_claim(
    "splitting_2k2_set",
    "The splitting expansions of two independent edges are exactly an edge plus a triangle and an edge plus a 3-path.",
)
def _c_split_2k2(ctx: RunContext):
    got = splitting_graph(named("2k2"))
    want = Family(
        (
            disjoint_union(named("k2"), named("c3")),
            disjoint_union(named("k2"), named("p3")),
        )
    )
    witnesses = [] if got == want else _decode(got.cert_set() ^ want.cert_set())
    return {"source": "2k2"}, len(got), witnesses


@_claim(
    "splitting_c4_figure",
    "The splitting expansions of the 4-cycle are exactly the four recorded instances.",
)
def _c_split_c4(ctx: RunContext):
    return _splitting_figure_claim(ctx, "c4", "fig5")


@_claim(
    "splitting_c5_figure",
    "The splitting expansions of the 5-cycle are exactly the four recorded instances.",
)
def _c_split_c5(ctx: RunContext):
    return _splitting_figure_claim(ctx, "c5", "fig8")


def _free_split_claim(source_names: tuple[str, ...], want_names: tuple[str, ...]):
    fam = _fam(*source_names)
    got = free_splits(fam)
    want = _fam(*want_names) if want_names else Family(())
    witnesses = [] if got == want else _decode(got.cert_set() ^ want.cert_set())
    checked = len(splitting_family(fam))
    return checked, witnesses


@_claim("free_split_claw", "The bull is the only claw-free splitting expansion of the claw.")
def _c_fs_claw(ctx: RunContext):
    checked, w = _free_split_claim(("claw",), ("bull",))
    return {"family": "claw"}, checked, w


@_claim("free_split_2k2", "No splitting expansion of two independent edges avoids two independent edges.")
def _c_fs_2k2(ctx: RunContext):
    checked, w = _free_split_claim(("2k2",), ())
    return {"family": "2k2"}, checked, w


@_claim("free_split_p4", "No splitting expansion of the 4-path is 4-path-free.")
def _c_fs_p4(ctx: RunContext):
    checked, w = _free_split_claim(("p4",), ())
    return {"family": "p4"}, checked, w


@_claim("free_split_c4", "The 5-cycle is the only 4-cycle-free splitting expansion of the 4-cycle.")
def _c_fs_c4(ctx: RunContext):
    checked, w = _free_split_claim(("c4",), ("c5",))
    return {"family": "c4"}, checked, w


@_claim("free_split_c5", "The 6-cycle is the only 5-cycle-free splitting expansion of the 5-cycle.")
def _c_fs_c5(ctx: RunContext):
    checked, w = _free_split_claim(("c5",), ("c6",))
    return {"family": "c5"}, checked, w


@_claim(
    "free_split_cycles",
    "For each cycle length 3 through 7, the next longer cycle is the only cycle-free splitting expansion.",
)
def _c_fs_cycles(ctx: RunContext):
    witnesses = []
    checked = 0
    for n in range(3, 8):
        got = free_splits(_fam(f"c{n}"))
        want = _fam(f"c{n + 1}")
        checked += len(splitting_graph(named(f"c{n}")))
        if got != want:
            witnesses.append(f"c{n}: " + " ".join(_decode(got.cert_set() ^ want.cert_set())))
    return {"lengths": "3..7"}, checked, witnesses


@_claim(
    "free_split_paths",
    "For each path length 2 through 7, no splitting expansion of the path is path-free.",
)
def _c_fs_paths(ctx: RunContext):
    witnesses = []
    checked = 0
    for n in range(2, 8):
        got = free_splits(_fam(f"p{n}"))
        checked += len(splitting_graph(named(f"p{n}")))
        if len(got) != 0:
            witnesses.append(f"p{n}: " + " ".join(_decode(got.cert_set())))
    return {"lengths": "2..7"}, checked, witnesses


@_claim(
    "splitting_membership",
    "A graph has a contraction isomorphic to the pattern exactly when it is a splitting expansion of the pattern.",
)
def _c_membership(ctx: RunContext):
    n_max = ctx.bound(7)
    witnesses = []
    checked = 0
    for name in ("claw", "2k2", "p4", "c4", "c5"):
        pattern = named(name)
        split_certs = frozenset(splitting_graph(pattern).certs)
        space = ctx.space(min(n_max, pattern.n + 1), exclude_isolated=False)
        args = (canonical_form(pattern), split_certs)
        for i, g in enumerate(space.graphs):
            if g.n != pattern.n + 1:
                continue
            checked += 1
            if _sf_membership_disagree(g, space.certs[i], args):
                witnesses.append(f"{name}: {write_graph6(g)}")
    return {"n_max": n_max, "families": "claw,2k2,p4,c4,c5"}, checked, witnesses


# ---------------------------------------------------------------------------
# claims: contraction stability
# ---------------------------------------------------------------------------

@_claim(
    "key_equivalence",
    "For a family-free graph, all contractions stay family-free exactly when the graph avoids the family's free splitting expansions.",
)
def _c_key(ctx: RunContext):
    n_max = ctx.bound(8)
    space = ctx.space(n_max)
    witnesses = []
    checked = 0
    for name in ("claw", "2k2", "p4", "c4", "c5"):
        fam = _single(name)
        fs_blob = _to_blob(free_splits(fam))
        flagged = _scan(ctx, space, "key", (_to_blob(fam), fs_blob))
        checked += len(space)
        witnesses.extend(f"{name}: {space.certs[i].decode('ascii')}" for i in sorted(flagged))
    return {"n_max": n_max, "families": "claw,2k2,p4,c4,c5"}, checked, witnesses


@_claim(
    "characterization_theorem",
    "A graph avoiding the family's free splitting expansions that is not contraction-critical is family-free exactly when all its contractions are.",
)
def _c_characterization(ctx: RunContext):
    n_max = ctx.bound(7)
    space = ctx.space(n_max)
    fam_lists = [("claw",), ("2k2",), ("p4",), ("c4",), ("c5",),
                 ("2k2", "c4", "c5"), ("2k2", "c4"), ("2k2", "p4", "c4")]
    witnesses = []
    checked = 0
    for names in fam_lists:
        fam = _fam(*names)
        fs_blob = _to_blob(free_splits(fam))
        flagged = _scan(ctx, space, "characterization", (_to_blob(fam), fs_blob))
        checked += len(space)
        label = ",".join(names)
        witnesses.extend(f"{label}: {space.certs[i].decode('ascii')}" for i in sorted(flagged))
    return {"n_max": n_max, "families": 8}, checked, witnesses


@_claim("ec_c3", "The triangle is the only contraction-critical graph for the triangle.")
def _c_ec_c3(ctx: RunContext):
    n_max = ctx.bound(8)
    crit = _crit_sets(ctx, n_max)["c3"]
    want = frozenset({canonical_form(named("c3"))})
    witnesses = _decode(crit ^ want)
    return {"n_max": n_max}, len(ctx.space(n_max)), witnesses


@_claim(
    "cycle_contraction",
    "Every graph containing an induced cycle of length 5 to 7 has a contraction containing the next shorter induced cycle.",
)
def _c_cycle_contraction(ctx: RunContext):
    n_max = ctx.bound(7)
    witnesses = []
    checked = 0
    for n in range(5, 8):
        if n > n_max:
            continue
        space = ctx.space(n_max)
        cyc = named(f"c{n}")
        smaller = named(f"c{n - 1}")
        flagged = _scan(
            ctx, space, "cycle_contraction", ((cyc.n, cyc.adj), (smaller.n, smaller.adj))
        )
        checked += len(space)
        witnesses.extend(f"c{n}: {space.certs[i].decode('ascii')}" for i in sorted(flagged))
    return {"n_max": n_max, "cycles": "5..7"}, checked, witnesses


def _ec_figure_claim(ctx: RunContext, claim_id: str, figure: str, names: tuple[str, ...]):
    n_max = ctx.bound(8)
    crit = _crit_sets(ctx, n_max)[",".join(names)]
    want = _figure_certs(figure, n_max)
    witnesses = []
    for cert in _decode(crit - want):
        witnesses.append(f"scan-only: {cert}")
    for cert in _decode(want - crit):
        witnesses.append(f"figure-only: {cert}")
    return {"n_max": n_max, "figure": figure, "family": ",".join(names)}, len(ctx.space(n_max)), witnesses


for _cid, _fig, _names in EC_TABLE:
    _doc = {
        "ec_claw_figure": "The recorded graphs are exactly the contraction-critical claw-containing graphs.",
        "ec_2k2_figure": "The recorded graphs are exactly the contraction-critical graphs for two independent edges.",
        "ec_p4_figure": "The recorded graphs are exactly the contraction-critical 4-path-containing graphs.",
        "ec_c4_figure": "The recorded graphs are exactly the contraction-critical 4-cycle-containing graphs.",
        "ec_c5_figure": "The recorded graphs are exactly the contraction-critical 5-cycle-containing graphs.",
        "ec_split_figure": "The recorded graphs are exactly the contraction-critical non-split graphs.",
        "ec_pseudo_split_figure": "The recorded graphs are exactly the contraction-critical non-pseudo-split graphs.",
        "ec_threshold_figure": "The recorded graphs are exactly the contraction-critical non-threshold graphs.",
    }[_cid]

    def _make(cid: str, fig: str, names: tuple[str, ...]):
        def run(ctx: RunContext):
            return _ec_figure_claim(ctx, cid, fig, names)

        return run

    REGISTRY[_cid] = Claim(_cid, _doc, _make(_cid, _fig, _names))


@_claim(
    "figure_instances_critical",
    "Every generated instance of the eight critical-family figures, up to nine vertices, is contraction-critical for its class.",
)
def _c_figures_critical(ctx: RunContext):
    witnesses = []
    checked = 0
    for _cid, figure, names in EC_TABLE:
        fam = _fam(*names)
        for m in figure_graphs(figure, 9):
            checked += 1
            if not _critically_exist(m.graph.adj, m.graph.n, fam):
                witnesses.append(f"{figure}/{m.label}: {write_graph6(m.graph)}")
    return {"max_n": 9, "figures": 8}, checked, witnesses


for _bid, _fnames, _hyp, _fig in BICOND_TABLE:
    _doc = {
        "bicond_claw": "For bull-free graphs outside the recorded critical set, claw-freeness survives every contraction exactly when present.",
        "bicond_2k2": "Outside the recorded critical set, freeness from two independent edges survives every contraction exactly when present.",
        "bicond_p4": "Outside the recorded critical set, 4-path-freeness survives every contraction exactly when present.",
        "bicond_c4": "For 5-cycle-free graphs outside the recorded critical set, 4-cycle-freeness survives every contraction exactly when present.",
        "bicond_c5": "For 6-cycle-free graphs outside the recorded critical set, 5-cycle-freeness survives every contraction exactly when present.",
        "bicond_split": "Outside the recorded critical set, being split survives every contraction exactly when present.",
        "bicond_pseudo_split": "For 5-cycle-free graphs outside the recorded critical set, being pseudo-split survives every contraction exactly when present.",
        "bicond_threshold": "For 5-cycle-free graphs outside the recorded critical set, being threshold survives every contraction exactly when present.",
    }[_bid]

    def _make_bicond(fnames: tuple[str, ...], hyp: tuple[str, ...], fig: str):
        def run(ctx: RunContext):
            n_max = ctx.bound(7)
            space = ctx.space(n_max)
            fam = _fam(*fnames)
            exception_certs = _figure_certs(fig, n_max)
            args = (_to_blob(fam), _to_blob(tuple(named(h) for h in hyp)), exception_certs)
            flagged = _scan(ctx, space, "bicond", args)
            witnesses = [space.certs[i].decode("ascii") for i in sorted(flagged)]
            params = {
                "n_max": n_max,
                "family": ",".join(fnames),
                "hypothesis_free": ",".join(hyp) or "none",
                "exceptions": fig,
            }
            return params, len(space), witnesses

        return run

    REGISTRY[_bid] = Claim(_bid, _doc, _make_bicond(_fnames, _hyp, _fig))


# ---------------------------------------------------------------------------
# claims: critical edges and structure
# ---------------------------------------------------------------------------

@_claim(
    "edge_criticality_equivalence",
    "The contraction test and the corner-domination rule agree on every edge-subset criticality question.",
)
def _c_edge_crit(ctx: RunContext):
    n_max = ctx.bound(7)
    space = ctx.space(n_max)
    patterns = tuple(named(n) for n in ("k2", "p3", "claw", "2k2", "p4", "c4"))
    flagged = _scan(ctx, space, "edge_crit", (_to_blob(patterns),))
    witnesses = [space.certs[i].decode("ascii") for i in sorted(flagged)]
    return {"n_max": n_max, "patterns": "k2,p3,claw,2k2,p4,c4"}, len(space), witnesses


@_claim(
    "critical_structure",
    "In a contraction-critical graph, the complement of any witness subset is independent and none of its vertices is a corner dominated from the subset.",
)
def _c_critical_structure(ctx: RunContext):
    n_max = ctx.bound(8)
    sets = _crit_sets(ctx, n_max)
    witnesses = []
    checked = 0
    for names_key, certs in sets.items():
        fam = _fam(*names_key.split(","))
        for cert in sorted(certs):
            g = parse_graph6(cert.decode("ascii"))
            checked += 1
            for size in sorted({m.n for m in fam}):
                for subset in combinations(range(g.n), size):
                    if canonical_form(induced(g, subset)) not in fam.certs:
                        continue
                    outside = [x for x in range(g.n) if x not in subset]
                    for i, x in enumerate(outside):
                        for y in outside[i + 1 :]:
                            if g.has_edge(x, y):
                                witnesses.append(f"{names_key}: {cert.decode('ascii')} edge {x}-{y} outside {subset}")
                    for x in outside:
                        for v in subset:
                            if corner_dominated(g, x, v):
                                witnesses.append(f"{names_key}: {cert.decode('ascii')} corner {x} under {v}")
    return {"n_max": n_max, "families": len(sets)}, checked, witnesses


@_claim(
    "critical_structure_corollary",
    "In a contraction-critical graph, no vertex outside a witness subset has degree one, two adjacent neighbors, three neighbors forming a path or triangle, or a universal neighbor.",
)
def _c_critical_corollary(ctx: RunContext):
    n_max = ctx.bound(8)
    sets = _crit_sets(ctx, n_max)
    p3_cert = canonical_form(named("p3"))
    c3_cert = canonical_form(named("c3"))
    witnesses = []
    checked = 0
    for names_key, certs in sets.items():
        fam = _fam(*names_key.split(","))
        for cert in sorted(certs):
            g = parse_graph6(cert.decode("ascii"))
            checked += 1
            for size in sorted({m.n for m in fam}):
                for subset in combinations(range(g.n), size):
                    if canonical_form(induced(g, subset)) not in fam.certs:
                        continue
                    for x in range(g.n):
                        if x in subset:
                            continue
                        nbs = g.neighbors(x)
                        bad = False
                        if len(nbs) == 1:
                            bad = True
                        elif len(nbs) == 2 and g.has_edge(*nbs):
                            bad = True
                        elif len(nbs) == 3 and canonical_form(induced(g, nbs)) in (p3_cert, c3_cert):
                            bad = True
                        elif any(g.degree(v) == g.n - 1 for v in nbs):
                            bad = True
                        if bad:
                            witnesses.append(f"{names_key}: {cert.decode('ascii')} vertex {x}")
    return {"n_max": n_max, "families": len(sets)}, checked, witnesses


@_claim(
    "almost_dominating_equivalence",
    "A graph avoids two independent edges exactly when every edge is almost dominating.",
)
def _c_almost_dom(ctx: RunContext):
    n_max = ctx.bound(8)
    space = ctx.space(n_max)
    flagged = _scan(ctx, space, "almost_dom", (_to_blob(_single("2k2")),))
    witnesses = [space.certs[i].decode("ascii") for i in sorted(flagged)]
    return {"n_max": n_max}, len(space), witnesses


@_claim(
    "unique_2k2_sufficiency",
    "A unique pair of independent edges whose every edge is criticality-forcing makes the graph contraction-critical for that pattern.",
)
def _c_unique_2k2(ctx: RunContext):
    n_max = ctx.bound(8)
    space = ctx.space(n_max)
    flagged = _scan(ctx, space, "unique_2k2", ())
    witnesses = [space.certs[i].decode("ascii") for i in sorted(flagged)]
    return {"n_max": n_max}, len(space), witnesses


# ---------------------------------------------------------------------------
# claims: recognizer oracles and closure
# ---------------------------------------------------------------------------

@_claim("split_oracle_agreement", "Forbidden-subgraph split recognition agrees with the degree-sequence oracle.")
def _c_split_oracle(ctx: RunContext):
    n_max = ctx.bound(8)
    space = ctx.cache.space(n_max, exclude_isolated=False)
    flagged = _scan(ctx, space, "split_oracle", ())
    witnesses = [space.certs[i].decode("ascii") for i in sorted(flagged)]
    return {"n_max": n_max, "isolated": "included"}, len(space), witnesses


@_claim("threshold_oracle_agreement", "Forbidden-subgraph threshold recognition agrees with the elimination oracle.")
def _c_threshold_oracle(ctx: RunContext):
    n_max = ctx.bound(8)
    space = ctx.cache.space(n_max, exclude_isolated=False)
    flagged = _scan(ctx, space, "threshold_oracle", ())
    witnesses = [space.certs[i].decode("ascii") for i in sorted(flagged)]
    return {"n_max": n_max, "isolated": "included"}, len(space), witnesses


@_claim("split_contraction_closed", "Contracting any edge of a split graph yields a split graph.")
def _c_split_closed(ctx: RunContext):
    n_max = ctx.bound(8)
    space = ctx.space(n_max)
    flagged = _scan(ctx, space, "split_closed", (_to_blob(_fam("2k2", "c4", "c5")),))
    witnesses = [space.certs[i].decode("ascii") for i in sorted(flagged)]
    return {"n_max": n_max}, len(space), witnesses


@_claim(
    "splitting_cover_not_free",
    "A splitting move that hands one replacement vertex the whole neighborhood reproduces the host as induced subgraph.",
)
def _c_cover_not_free(ctx: RunContext):
    n_max = min(ctx.bound(6), 6)
    space = ctx.space(n_max)
    witnesses = []
    checked = 0
    for host in space.graphs:
        if host.n + 1 > 9 or host.n == 0:
            continue
        for v in range(host.n):
            nbh = frozenset(_bits(host.adj[v]))
            if not nbh:
                continue
            subsets = [frozenset(s) for r in range(len(nbh) + 1) for s in combinations(sorted(nbh), r)]
            for other in subsets:
                checked += 1
                result = splitting_one(SplitSpec(host, v, frozenset(nbh), other))
                if not exists_induced(result, host):
                    witnesses.append(f"{write_graph6(host)} v={v} other={sorted(other)}")
    return {"n_max": n_max}, checked, witnesses


@_claim(
    "degree_one_not_free",
    "Splitting a degree-one vertex always reproduces the host as induced subgraph.",
)
def _c_degree_one(ctx: RunContext):
    n_max = min(ctx.bound(6), 6)
    space = ctx.space(n_max)
    witnesses = []
    checked = 0
    for host in space.graphs:
        for v in range(host.n):
            if host.degree(v) != 1:
                continue
            for result in splitting_vertex(host, v):
                checked += 1
                if not exists_induced(result, host):
                    witnesses.append(f"{write_graph6(host)} v={v}")
    return {"n_max": n_max}, checked, witnesses
