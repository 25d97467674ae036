"""Exhaustive verification of the total forcing results over graph corpora."""

from __future__ import annotations

from .checks import CHECK_IDS, REGISTRY, Outcome
from .context import INVARIANT_COLUMNS, GraphContext, compute_invariants
from .report import render, render_csv, render_jsonl, render_table
from .runner import (
    CensusOptions,
    CensusReport,
    evaluate_graph,
    file_source,
    generated_source,
    replay,
    run_census,
)

__all__ = [
    "CHECK_IDS",
    "INVARIANT_COLUMNS",
    "REGISTRY",
    "CensusOptions",
    "CensusReport",
    "GraphContext",
    "Outcome",
    "compute_invariants",
    "evaluate_graph",
    "file_source",
    "generated_source",
    "render",
    "render_csv",
    "render_jsonl",
    "render_table",
    "replay",
    "run_census",
]
