"""Census driver: evaluate the check suite over a corpus, optionally in worker processes."""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from ..errors import Graph6Error, GuardError
from ..generators import all_connected_graphs
from ..graph import SUBSET_GUARD, Graph, check_guard
from ..graph6 import iter_graph6, parse_graph6, write_graph6
from .checks import CHECK_IDS, FAIL, PASS, REGISTRY, SKIP
from .context import GraphContext, compute_invariants

TIEBREAK_ALIASES = {"paper": "paper_max_undominated", "min": "min_undominated", "none": "none"}


@dataclass(frozen=True)
class CensusOptions:
    checks: tuple[str, ...] = CHECK_IDS
    max_n: int = SUBSET_GUARD
    override_guard: bool = False
    tiebreak: str = "paper_max_undominated"
    repair: bool = True

    def __post_init__(self):
        unknown = [c for c in self.checks if c not in REGISTRY]
        if unknown:
            raise ValueError(f"unknown check ids: {', '.join(unknown)}")
        object.__setattr__(self, "tiebreak", TIEBREAK_ALIASES.get(self.tiebreak, self.tiebreak))

    def describe(self) -> dict:
        return {
            "checks": list(self.checks),
            "max_n": self.max_n,
            "override_guard": self.override_guard,
            "tiebreak": self.tiebreak,
            "repair": self.repair,
        }


@dataclass
class GraphRecord:
    index: int
    invariants: dict
    status: dict[str, str]
    details: dict[str, str]
    discrepancies: list[tuple[str, str]]

    @property
    def graph6(self) -> str:
        return self.invariants["graph6"]


@dataclass
class CheckSummary:
    check_id: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)


@dataclass
class CensusReport:
    """Outcome of a census run. ``records`` is empty when the run was made with ``keep_records=False``."""

    source: str
    options: CensusOptions
    records: list[GraphRecord]
    summaries: dict[str, CheckSummary]
    discrepancies: dict[str, list[tuple[str, str]]]
    errors: list[tuple[int, str]]
    graph_count: int = 0
    wall_time: float = 0.0

    @property
    def total_failures(self) -> int:
        return sum(s.failed for s in self.summaries.values())

    @property
    def ok(self) -> bool:
        return self.total_failures == 0 and not self.errors


def evaluate_graph(g: Graph, options: CensusOptions, index: int = 0) -> GraphRecord:
    """Run every selected check on one graph; pure, so safe to call from any worker."""
    ctx = GraphContext(
        g,
        max_n=options.max_n,
        override_guard=options.override_guard,
        tiebreak=options.tiebreak,
        repair=options.repair,
    )
    status, details, disc = {}, {}, []
    for cid in options.checks:
        out = REGISTRY[cid].run(ctx)
        status[cid] = out.status
        if out.detail:
            details[cid] = out.detail
        disc.extend(out.discrepancies)
    return GraphRecord(index, compute_invariants(ctx), status, details, disc)


def replay(graph6: str, check_id: str, **options) -> str:
    """Re-run one check on one graph in isolation and return its status."""
    g = parse_graph6(graph6)
    rec = evaluate_graph(g, CensusOptions(checks=(check_id,), **options))
    return rec.status[check_id]


def _worker(args: tuple[int, str, CensusOptions]) -> GraphRecord | tuple[int, str]:
    index, g6, options = args
    g = parse_graph6(g6)
    try:
        check_guard(g, options.max_n, options.override_guard)
        return evaluate_graph(g, options, index)
    except GuardError as exc:
        return index, str(exc)


def generated_source(n_values: Iterable[int]) -> Iterator[tuple[int, Graph | Exception]]:
    i = 0
    for n in n_values:
        for g in all_connected_graphs(n):
            i += 1
            yield i, g


def file_source(path: str) -> Iterator[tuple[int, Graph | Exception]]:
    with open(path, encoding="ascii", errors="replace") as fh:
        yield from iter_graph6(fh)


def run_census(
    source: Iterable[tuple[int, Graph | Exception]],
    options: CensusOptions | None = None,
    *,
    jobs: int = 1,
    label: str = "",
    chunksize: int = 64,
    keep_records: bool = True,
) -> CensusReport:
    """Evaluate the selected checks on every graph of ``source``.

    ``source`` yields ``(position, graph)`` pairs, or ``(line, exception)`` for
    entries that failed to parse; those are recorded and the run continues.
    Results are consumed in source order, so report content is identical for
    any ``jobs`` value. ``keep_records=False`` drops per-graph rows after they
    are tallied, which keeps memory flat on large corpora.
    """
    options = options or CensusOptions()
    start = time.perf_counter()
    errors: list[tuple[int, str]] = []

    def tasks() -> Iterator[tuple[int, str, CensusOptions]]:
        for pos, item in source:
            if isinstance(item, Graph6Error):
                errors.append((pos, f"graph6 parse error: {item}"))
            elif isinstance(item, Exception):
                errors.append((pos, str(item)))
            else:
                yield pos, write_graph6(item), options

    summaries = {cid: CheckSummary(cid) for cid in options.checks}
    discrepancies: dict[str, list[tuple[str, str]]] = {}
    records: list[GraphRecord] = []
    count = 0

    def tally(rec: GraphRecord | tuple[int, str]) -> None:
        if not isinstance(rec, GraphRecord):
            errors.append(rec)
            return
        nonlocal count
        count += 1
        if keep_records:
            records.append(rec)
        for cid, st in rec.status.items():
            s = summaries[cid]
            if st == PASS:
                s.passed += 1
            elif st == FAIL:
                s.failed += 1
                s.failures.append((rec.graph6, rec.details.get(cid, "")))
            elif st == SKIP:
                s.skipped += 1
        for kind, detail in rec.discrepancies:
            discrepancies.setdefault(kind, []).append((rec.graph6, detail))

    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            for rec in pool.imap(_worker, tasks(), chunksize=chunksize):
                tally(rec)
    else:
        for t in tasks():
            tally(_worker(t))
    errors.sort()
    return CensusReport(
        label,
        options,
        records,
        summaries,
        dict(sorted(discrepancies.items())),
        errors,
        count,
        time.perf_counter() - start,
    )
