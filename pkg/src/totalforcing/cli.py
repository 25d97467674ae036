"""Command line entry point: ``totalforcing {census,invariants,construct,gadget,solve}``.

Exit codes: 0 when everything passes, 1 when a check or construction fails,
2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Sequence

from .census import (
    CHECK_IDS,
    INVARIANT_COLUMNS,
    CensusOptions,
    compute_invariants,
    file_source,
    generated_source,
    render,
    run_census,
)
from .census.runner import TIEBREAK_ALIASES
from .constructions import (
    packing_tf,
    tf_add_vertex_back,
    tf_delete_vertex,
    tf_doubling,
    tf_from_dominating,
    tf_from_power_dominating,
    tf_from_total_dominating,
)
from .errors import Graph6Error, TotalForcingError
from .gadget import build_gadget
from .generators import MAX_ENUM_N, generate
from .graph import SUBSET_GUARD, Graph, delete_vertex
from .graph6 import parse_graph6, write_graph6
from .solvers import min_domination, min_forcing

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_CENSUS_ORDER = 6

SOLVE_TARGETS = {
    "F": ("forcing", "plain"),
    "F_t": ("forcing", "total"),
    "F_c": ("forcing", "connected"),
    "gamma": ("domination", "plain"),
    "gamma_t": ("domination", "total"),
    "gamma_c": ("domination", "connected"),
    "gamma_2": ("domination", "two_step"),
    "gamma_P": ("domination", "power"),
}
CONSTRUCTIONS = ("packing", "doubling", "dominating", "total_dominating", "power_dominating", "add_vertex", "delete_vertex")


class UsageError(Exception):
    pass


def _param(text: str) -> int | str:
    try:
        return int(text)
    except ValueError:
        return text


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("input (one of)")
    src.add_argument("--corpus", metavar="FILE", help="graph6 file, one graph per line")
    src.add_argument("--family", metavar="NAME", help="generated family, e.g. spider")
    src.add_argument("--params", nargs="*", default=[], metavar="P", help="family parameters")
    src.add_argument("--graph6", metavar="STRING", help="a single graph in graph6")


def _add_guard(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-n", type=int, default=SUBSET_GUARD, metavar="GUARD", help="largest order for exhaustive search")
    p.add_argument("--override-guard", action="store_true", help="allow exhaustive search above the guard")


def _add_packing(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tiebreak", choices=sorted(TIEBREAK_ALIASES), default="paper", help="maximum packing tiebreak")
    p.add_argument("--repair", choices=("on", "off"), default="on", help="allow fallbacks when the literal construction fails")


def _graphs(args) -> Iterator[tuple[int, Graph | Exception]]:
    given = [x for x in (args.corpus, args.family, args.graph6) if x is not None]
    if len(given) > 1:
        raise UsageError("give at most one of --corpus, --family, --graph6")
    if args.corpus is not None:
        try:
            yield from file_source(args.corpus)
        except OSError as exc:
            raise UsageError(f"cannot read corpus: {exc}") from None
    elif args.family is not None:
        try:
            g = generate(args.family, *(_param(x) for x in args.params))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        yield 1, g
    elif args.graph6 is not None:
        try:
            yield 1, parse_graph6(args.graph6)
        except Graph6Error as exc:
            raise UsageError(f"graph6 parse error: {exc}") from None
    else:
        raise UsageError("no input graph: use --corpus, --family or --graph6")


def _single_graph(args) -> Graph:
    items = list(_graphs(args))
    if len(items) != 1:
        raise UsageError("this subcommand takes exactly one graph")
    _, g = items[0]
    if isinstance(g, Exception):
        raise UsageError(f"graph6 parse error: {g}")
    return g


# subcommands

def cmd_census(args) -> int:
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip()) if args.checks else CHECK_IDS
    options = CensusOptions(
        checks=checks,
        max_n=args.max_n,
        override_guard=args.override_guard,
        tiebreak=args.tiebreak,
        repair=args.repair == "on",
    )
    if args.corpus or args.family or args.graph6:
        source, label = _graphs(args), args.corpus or args.family or "graph6 argument"
    else:
        top = args.orders
        if top > DEFAULT_CENSUS_ORDER and not args.allow_large:
            raise UsageError(f"census beyond order {DEFAULT_CENSUS_ORDER} needs --allow-large")
        if not 1 <= top <= MAX_ENUM_N:
            raise UsageError(f"--orders must lie in 1..{MAX_ENUM_N}")
        source, label = generated_source(range(1, top + 1)), f"all connected labelled graphs, n = 1..{top}"
    report = run_census(source, options, jobs=args.jobs, label=label, keep_records=args.format != "table")
    sys.stdout.write(render(report, args.format))
    print(f"wall time: {report.wall_time:.1f} s with {args.jobs} job(s)", file=sys.stderr)
    if report.total_failures:
        return EXIT_FAIL
    return EXIT_USAGE if report.errors else EXIT_OK


def cmd_invariants(args) -> int:
    rows, errors = [], []
    for pos, g in _graphs(args):
        if isinstance(g, Exception):
            errors.append(f"line {pos}: {g}")
            continue
        rows.append(compute_invariants(
            g, max_n=args.max_n, override_guard=args.override_guard,
            tiebreak=TIEBREAK_ALIASES[args.tiebreak], repair=args.repair == "on",
        ))
    if args.format == "jsonl":
        for r in rows:
            print(json.dumps(r, sort_keys=True))
    else:
        sep = "," if args.format == "csv" else "  "
        print(sep.join(INVARIANT_COLUMNS))
        for r in rows:
            print(sep.join("-" if r[c] is None and sep != "," else "" if r[c] is None else str(r[c]) for c in INVARIANT_COLUMNS))
    for e in errors:
        print(e, file=sys.stderr)
    return EXIT_USAGE if errors else EXIT_OK


def _vertex_set(text: str | None) -> list[int] | None:
    if text is None:
        return None
    return [int(x) for x in text.replace(",", " ").split()]


def cmd_construct(args) -> int:
    g = _single_graph(args)
    given = _vertex_set(args.set)
    kind = args.construction
    guard = dict(max_n=args.max_n, override_guard=args.override_guard)

    def default(res_fn):
        return given if given is not None else sorted(res_fn().witness)

    if kind == "packing":
        cert = packing_tf(g, packing_tiebreak=TIEBREAK_ALIASES[args.tiebreak], repair=args.repair == "on")
    elif kind == "doubling":
        cert = tf_doubling(g, default(lambda: min_forcing(g, "plain", **guard)))
    elif kind == "dominating":
        cert = tf_from_dominating(g, default(lambda: min_domination(g, "plain", **guard)))
    elif kind == "total_dominating":
        cert = tf_from_total_dominating(g, default(lambda: min_domination(g, "total", **guard)))
    elif kind == "power_dominating":
        cert = tf_from_power_dominating(g, default(lambda: min_domination(g, "power", **guard)))
    else:
        if args.vertex is None:
            raise UsageError(f"{kind} needs --vertex")
        v = args.vertex
        if not 0 <= v < g.n:
            raise UsageError(f"vertex {v} not in graph of order {g.n}")
        if kind == "delete_vertex":
            cert = tf_delete_vertex(g, default(lambda: min_forcing(g, "total", **guard)), v)
        else:
            if given is None:
                h, relabel = delete_vertex(g, v)
                back = {new: old for old, new in relabel.items()}
                given = [back[x] for x in min_forcing(h, "total", **guard).witness]
            cert = tf_add_vertex_back(g, given, v)
    record = {"construction": kind, **cert.to_record()}
    if args.format == "jsonl":
        print(json.dumps(record, sort_keys=True))
    else:
        print(f"construction: {kind}")
        print(f"tf_set: {' '.join(map(str, record['tf_set']))}")
        print(f"size: {record['size']}  bound: {record['claimed_bound']}")
        for line in record["case_log"]:
            print(f"  {line}")
        if args.chronology:
            sys.stdout.write(cert.chronology.to_text())
    return EXIT_OK


def cmd_gadget(args) -> int:
    m = build_gadget(_single_graph(args))
    print(write_graph6(m.gadget))
    if args.mapping:
        with open(args.mapping, "w", encoding="ascii") as fh:
            fh.write(m.to_text())
    else:
        sys.stdout.write(m.to_text())
    return EXIT_OK


def cmd_solve(args) -> int:
    kind, variant = SOLVE_TARGETS[args.invariant]
    status = EXIT_OK
    for pos, g in _graphs(args):
        if isinstance(g, Exception):
            print(f"line {pos}: {g}", file=sys.stderr)
            status = EXIT_USAGE
            continue
        fn = min_forcing if kind == "forcing" else min_domination
        res = fn(g, variant, max_n=args.max_n, override_guard=args.override_guard)
        if args.format == "jsonl":
            print(json.dumps({"graph6": write_graph6(g), args.invariant: res.value, "witness": sorted(res.witness)}))
        else:
            print(f"{write_graph6(g)}  {args.invariant} = {res.value}  witness: {' '.join(map(str, sorted(res.witness)))}")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="totalforcing", description="Total forcing sets: solvers, constructions and census.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="run the theorem checks over a corpus")
    _add_input(p)
    p.add_argument("--orders", type=int, default=DEFAULT_CENSUS_ORDER, metavar="N",
                   help="without an input, enumerate connected labelled graphs of order 1..N")
    p.add_argument("--allow-large", action="store_true", help=f"permit --orders above {DEFAULT_CENSUS_ORDER}")
    p.add_argument("--checks", metavar="LIST", help=f"comma separated subset of: {', '.join(CHECK_IDS)}")
    p.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes")
    p.add_argument("--format", choices=("table", "csv", "jsonl"), default="table")
    _add_guard(p)
    _add_packing(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("invariants", help="print exact invariants")
    _add_input(p)
    p.add_argument("--format", choices=("table", "csv", "jsonl"), default="table")
    _add_guard(p)
    _add_packing(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("construct", help="build a certified TF-set")
    _add_input(p)
    p.add_argument("--construction", choices=CONSTRUCTIONS, default="packing")
    p.add_argument("--set", metavar="IDS", help="input vertex set (defaults to a minimum witness)")
    p.add_argument("--vertex", type=int, help="vertex for add_vertex / delete_vertex")
    p.add_argument("--chronology", action="store_true", help="print the forcing chronology")
    p.add_argument("--format", choices=("table", "jsonl"), default="table")
    _add_guard(p)
    _add_packing(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("gadget", help="emit the reduction gadget in graph6 plus its id mapping")
    _add_input(p)
    p.add_argument("--mapping", metavar="FILE", help="write the mapping here instead of standard output")
    p.set_defaults(func=cmd_gadget)

    p = sub.add_parser("solve", help="exact minimum for one invariant")
    _add_input(p)
    p.add_argument("--invariant", choices=sorted(SOLVE_TARGETS), default="F_t")
    p.add_argument("--format", choices=("table", "jsonl"), default="table")
    _add_guard(p)
    p.set_defaults(func=cmd_solve)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TotalForcingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
