"""Rendering of census reports as a text table, CSV, or JSON lines.

Wall time is deliberately left out of every rendering so output is
byte-identical across runs and worker counts; callers print it separately.
"""

from __future__ import annotations

import csv
import io
import json

from .checks import REGISTRY
from .context import INVARIANT_COLUMNS
from .runner import CensusReport

MAX_LISTED = 10


def render_table(report: CensusReport) -> str:
    out = io.StringIO()
    w = out.write
    w(f"source: {report.source}\n")
    w(f"graphs: {report.graph_count}  errors: {len(report.errors)}\n\n")
    width = max((len(c) for c in report.summaries), default=5)
    w(f"{'check':<{width}}  {'pass':>8}  {'fail':>6}  {'skip':>8}\n")
    w("-" * (width + 30) + "\n")
    for s in report.summaries.values():
        w(f"{s.check_id:<{width}}  {s.passed:>8}  {s.failed:>6}  {s.skipped:>8}\n")
    for s in report.summaries.values():
        if s.failures:
            w(f"\nfailures for {s.check_id} ({REGISTRY[s.check_id].description}):\n")
            for g6, detail in s.failures[:MAX_LISTED]:
                w(f"  {g6}  {detail}\n")
            if len(s.failures) > MAX_LISTED:
                w(f"  ... {len(s.failures) - MAX_LISTED} more\n")
    if report.discrepancies:
        w("\npaper-discrepancy (known gaps in the stated results, not counted as failures):\n")
        for kind, rows in report.discrepancies.items():
            w(f"  {kind}: {len(rows)} graph(s)\n")
            for g6, detail in rows[:MAX_LISTED]:
                w(f"    {g6}  {detail}\n")
    if report.errors:
        w("\nerrors:\n")
        for pos, msg in report.errors:
            w(f"  line {pos}: {msg}\n")
    verdict = "FAIL" if report.total_failures else "INPUT ERRORS" if report.errors else "PASS"
    w(f"\nresult: {verdict} ({report.total_failures} failing check evaluations, {len(report.errors)} input errors)\n")
    return out.getvalue()


def render_csv(report: CensusReport) -> str:
    """One row per graph: invariants followed by each check's status."""
    out = io.StringIO()
    checks = list(report.summaries)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([*INVARIANT_COLUMNS, *checks, "discrepancies"])
    for rec in report.records:
        inv = rec.invariants
        row = ["" if inv[c] is None else inv[c] for c in INVARIANT_COLUMNS]
        row += [rec.status[c] for c in checks]
        row.append(";".join(k for k, _ in rec.discrepancies))
        writer.writerow(row)
    return out.getvalue()


def render_jsonl(report: CensusReport) -> str:
    """Typed JSON records: ``meta``, one ``graph`` per input, one ``check`` per check, then discrepancies and errors."""
    lines = [{"type": "meta", "source": report.source, "options": report.options.describe(), "graphs": report.graph_count}]
    for rec in report.records:
        lines.append({
            "type": "graph", **rec.invariants, "status": rec.status, "details": rec.details,
            "discrepancies": [k for k, _ in rec.discrepancies],
        })
    for s in report.summaries.values():
        lines.append({
            "type": "check", "id": s.check_id, "pass": s.passed, "fail": s.failed, "skip": s.skipped,
            "failures": [g6 for g6, _ in s.failures],
        })
    for kind, rows in report.discrepancies.items():
        lines.append({"type": "discrepancy", "kind": kind, "count": len(rows), "graphs": [g6 for g6, _ in rows]})
    for pos, msg in report.errors:
        lines.append({"type": "error", "line": pos, "message": msg})
    return "".join(json.dumps(x, sort_keys=True) + "\n" for x in lines)


RENDERERS = {"table": render_table, "csv": render_csv, "jsonl": render_jsonl}


def render(report: CensusReport, fmt: str = "table") -> str:
    try:
        return RENDERERS[fmt](report)
    except KeyError:
        raise ValueError(f"unknown report format {fmt!r}") from None
