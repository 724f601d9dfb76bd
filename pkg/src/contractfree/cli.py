"""Command-line front end.

Verbs:
  check      per-family property report for input graphs
  contract   contract one edge and print the result
  splitting  print all splitting expansions of each input graph
  fs         print the family-free splitting expansions of the input family
  critical   scan the graph space for contraction-critical graphs
  enumerate  stream non-isomorphic graphs up to a vertex bound
  verify     run registered structural claims
  corpus     regenerate, write, or check the packaged figure corpus

Graphs are given in graph6, as a literal argument, a file path, or on
standard input one per line. Lines that are blank or start with # are
skipped. Exit status is 0 on success, 1 when a verification claim or
corpus check fails, 2 on usage errors including malformed graph6.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

from . import __version__
from .claims import REGISTRY, RunContext, _scan, _to_blob, verify
from .enumeration import SpaceCache
from .families import FIGURE_IDS, corpus_text, named
from .graphs import Graph, Graph6Error, contract, parse_graph6, write_graph6
from .hfree import (
    Family,
    elementary,
    find_induced,
    free_splits,
    is_critically_h_exist,
    is_h_free,
    is_strongly_h_free,
    splitting_graph,
)

FAMILY_TOKENS: dict[str, tuple[str, ...]] = {
    "claw": ("claw",),
    "2k2": ("2k2",),
    "p4": ("p4",),
    "c4": ("c4",),
    "c5": ("c5",),
    "split": ("2k2", "c4", "c5"),
    "pseudo_split": ("2k2", "c4"),
    "threshold": ("2k2", "p4", "c4"),
}

CORPUS_ENV = "CONTRACTFREE_CORPUS"


class UsageError(Exception):
    pass


def _family_for(token: str) -> Family:
    key = token.strip().lower()
    if key not in FAMILY_TOKENS:
        raise UsageError(
            f"unknown family {token!r}; choose from {', '.join(FAMILY_TOKENS)}"
        )
    return elementary(Family(tuple(named(n) for n in FAMILY_TOKENS[key])))


def _read_graphs(source: str | None) -> list[tuple[int, Graph]]:
    """Resolve a graph source to (line number, graph) pairs.

    A missing source or "-" reads standard input; an existing file path
    reads that file; anything else is taken as one graph6 literal.
    """
    if source is None or source == "-":
        lines = sys.stdin.read().splitlines()
    elif os.path.isfile(source):
        with open(source, encoding="ascii") as fh:
            lines = fh.read().splitlines()
    else:
        lines = [source]
    out = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        try:
            out.append((lineno, parse_graph6(text)))
        except Graph6Error as exc:
            raise UsageError(f"line {lineno}: {exc}") from exc
    if not out:
        raise UsageError("no graphs in input")
    return out


# ---------------------------------------------------------------------------
# verb handlers
# ---------------------------------------------------------------------------

def _cmd_check(args) -> int:
    graphs = _read_graphs(args.graph)
    tokens = [t for t in args.family.split(",") if t]
    fams = [(t, _family_for(t)) for t in tokens]
    for _lineno, g in graphs:
        g6 = write_graph6(g)
        isolated = bool(g.isolated_vertices())
        for token, fam in fams:
            free = is_h_free(g, fam)
            witness = None if free else find_induced(g, fam)
            strongly = is_strongly_h_free(g, fam) if free else None
            critically = None if isolated else is_critically_h_exist(g, fam)
            if args.format == "records":
                print(
                    json.dumps(
                        {
                            "graph6": g6,
                            "family": token,
                            "free": free,
                            "witness": list(witness) if witness else None,
                            "strongly_free": strongly,
                            "critically_exist": critically,
                        },
                        sort_keys=True,
                    )
                )
            else:
                parts = [g6, token, f"free={'yes' if free else 'no'}"]
                if witness is not None:
                    parts.append("witness=" + ",".join(map(str, witness)))
                parts.append(
                    "strongly_free=" + ("-" if strongly is None else "yes" if strongly else "no")
                )
                parts.append(
                    "critically_exist="
                    + ("-" if critically is None else "yes" if critically else "no")
                )
                print(" ".join(parts))
    return 0


def _cmd_contract(args) -> int:
    graphs = _read_graphs(args.graph)
    if len(graphs) != 1:
        raise UsageError("contract expects exactly one graph")
    g = graphs[0][1]
    try:
        result = contract(g, args.u, args.v)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(write_graph6(result.graph))
    return 0


def _cmd_splitting(args) -> int:
    graphs = _read_graphs(args.graph)
    for _lineno, host in graphs:
        if len(graphs) > 1:
            print(f"# {write_graph6(host)}")
        for member in splitting_graph(host):
            print(write_graph6(member))
    return 0


def _cmd_fs(args) -> int:
    graphs = _read_graphs(args.graph)
    fam = elementary(Family.of((g for _ln, g in graphs), dedup=True))
    for member in free_splits(fam):
        print(write_graph6(member))
    return 0


def _cmd_critical(args) -> int:
    fam = _family_for(args.family)
    ctx = RunContext(SpaceCache(), None, args.workers)
    space = ctx.space(args.nmax)
    flagged = _scan(ctx, space, "crit_mask", (_to_blob(fam),))
    for i in sorted(flagged):
        g6 = space.certs[i].decode("ascii")
        if args.format == "records":
            print(json.dumps({"graph6": g6, "n": space.graphs[i].n}, sort_keys=True))
        else:
            print(g6)
    return 0


def _cmd_enumerate(args) -> int:
    space = SpaceCache().space(args.nmax, args.exclude_isolated)
    if args.counts:
        counts = space.counts()
        for n in range(args.nmax + 1):
            print(f"{n} {counts.get(n, 0)}")
    else:
        for cert in space.certs:
            print(cert.decode("ascii"))
    return 0


def _cmd_verify(args) -> int:
    if args.claim == "list":
        for cid, claim in REGISTRY.items():
            print(f"{cid}: {claim.statement}")
        return 0
    ids = "all" if args.claim == "all" else [c for c in args.claim.split(",") if c]
    try:
        reports = verify(ids, n_max=args.nmax, workers=args.workers, cache=SpaceCache())
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    failed = 0
    for report in reports:
        if args.format == "records":
            print(report.to_record())
        else:
            print(report.to_text())
        failed += 0 if report.passed else 1
    if args.format != "records":
        print(f"{len(reports)} claims, {failed} failed")
    return 1 if failed else 0


def _corpus_dir(args) -> str:
    if args.out:
        return args.out
    env = os.environ.get(CORPUS_ENV)
    if env:
        return env
    raise UsageError(f"corpus directory needed: pass --out or set {CORPUS_ENV}")


def _packaged_corpus(figure: str) -> str:
    ref = resources.files("contractfree").joinpath("corpus", f"{figure}.g6")
    return ref.read_text(encoding="ascii")


def _cmd_corpus(args) -> int:
    figures = [args.figure] if args.figure else list(FIGURE_IDS)
    if args.check:
        bad = []
        for fig in figures:
            if _packaged_corpus(fig) != corpus_text(fig):
                bad.append(fig)
                print(f"MISMATCH {fig}")
            else:
                print(f"ok {fig}")
        return 1 if bad else 0
    if args.out or os.environ.get(CORPUS_ENV):
        out_dir = _corpus_dir(args)
        os.makedirs(out_dir, exist_ok=True)
        for fig in figures:
            path = os.path.join(out_dir, f"{fig}.g6")
            with open(path, "w", encoding="ascii") as fh:
                fh.write(corpus_text(fig))
            print(f"wrote {path}")
        return 0
    for fig in figures:
        sys.stdout.write(corpus_text(fig))
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contractfree",
        description="Contraction-stable graph family toolkit.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check", help="report per-family properties of input graphs")
    p.add_argument("graph", nargs="?", help="graph6 literal, file, or - for stdin")
    p.add_argument("--family", default=",".join(FAMILY_TOKENS), help="comma-separated family tokens")
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("contract", help="contract one edge")
    p.add_argument("graph", help="graph6 literal or file")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.set_defaults(fn=_cmd_contract)

    p = sub.add_parser("splitting", help="print all splitting expansions")
    p.add_argument("graph", nargs="?", help="graph6 literal, file, or - for stdin")
    p.set_defaults(fn=_cmd_splitting)

    p = sub.add_parser("fs", help="print family-free splitting expansions")
    p.add_argument("graph", nargs="?", help="graph6 literal, file, or - for stdin")
    p.set_defaults(fn=_cmd_fs)

    p = sub.add_parser("critical", help="scan for contraction-critical graphs")
    p.add_argument("--family", required=True, help="one family token")
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.set_defaults(fn=_cmd_critical)

    p = sub.add_parser("enumerate", help="stream non-isomorphic graphs")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--exclude-isolated", action="store_true")
    p.add_argument("--counts", action="store_true", help="print per-order counts instead")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("verify", help="run registered structural claims")
    p.add_argument("--claim", default="all", help="'all', 'list', or comma-separated claim ids")
    p.add_argument("--nmax", type=int, default=None, help="override the scan bound")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("corpus", help="regenerate, write, or check the figure corpus")
    p.add_argument("--figure", choices=tuple(FIGURE_IDS), default=None)
    p.add_argument("--out", default=None, help=f"output directory (or ${CORPUS_ENV})")
    p.add_argument("--check", action="store_true", help="compare packaged corpus against regeneration")
    p.set_defaults(fn=_cmd_corpus)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"contractfree: error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
