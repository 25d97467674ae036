from __future__ import annotations

import json

import pytest

from totalforcing.census import (
    CHECK_IDS,
    CensusOptions,
    GraphContext,
    compute_invariants,
    file_source,
    generated_source,
    render,
    replay,
    run_census,
)
from totalforcing.census.checks import REGISTRY
from totalforcing.generators import complete, cycle, path, spider, star
from totalforcing.graph import Graph
from totalforcing.graph6 import write_graph6
from oracle import connected_labelled_count


def test_connected_labelled_counts():
    assert [sum(1 for _ in generated_source([n])) for n in range(1, 6)] == [
        connected_labelled_count(n) for n in range(1, 6)
    ] == [1, 1, 4, 38, 728]


def test_census_n4_passes():
    report = run_census(generated_source([4]), CensusOptions())
    assert report.graph_count == 38 and report.ok
    assert all(s.passed + s.skipped == 38 for s in report.summaries.values())


def test_census_n5_no_discrepancies():
    report = run_census(generated_source(range(1, 6)), keep_records=False)
    assert report.ok and report.graph_count == 772
    assert report.discrepancies == {}
    assert report.records == []


def test_malformed_line_is_recorded(tmp_path):
    corpus = tmp_path / "g.g6"
    corpus.write_text(f"{write_graph6(path(4))}\nC!!\n{write_graph6(cycle(5))}\n")
    report = run_census(file_source(str(corpus)), label="g.g6")
    assert report.graph_count == 2
    assert len(report.errors) == 1 and report.errors[0][0] == 2
    assert report.total_failures == 0 and not report.ok
    assert "INPUT ERRORS" in render(report)


def test_disconnected_graph_discrepancy(tmp_path):
    corpus = tmp_path / "g.g6"
    corpus.write_text(write_graph6(Graph(6, [(0, 1), (2, 3), (4, 5)])) + "\n")
    report = run_census(file_source(str(corpus)))
    assert report.ok
    assert "nminus1_disconnected" in report.discrepancies


def test_literal_packing_residue_reported_not_failed():
    g = spider(3)
    opts = CensusOptions(checks=("construction_validity",))
    report = run_census([(1, g)], opts)
    assert report.ok
    assert "packing_literal_residue" in report.discrepancies
    off = run_census([(1, g)], CensusOptions(checks=("construction_validity",), repair=False))
    # with repair off the literal gap is still reported, never silently patched
    assert off.ok and off.records[0].invariants["packing_tf"] is None
    assert "packing_literal_residue" in off.discrepancies


@pytest.mark.parametrize("g", [path(7), cycle(8), complete(6)])
def test_obs4_on_families(g):
    assert replay(write_graph6(g), "obs4_formulas") == "pass"


def test_obs4_skips_other_graphs():
    assert replay(write_graph6(star(5)), "obs4_formulas") == "skip"


def test_replay_and_skip():
    assert replay(write_graph6(cycle(5)), "gamma_delta") == "skip"
    assert replay(write_graph6(complete(4)), "gamma_delta") == "pass"


def test_jobs_do_not_change_output():
    opts = CensusOptions(checks=("tf_ge_2", "upper_main", "vertex_removal"))
    one = run_census(generated_source([5]), opts, jobs=1)
    two = run_census(generated_source([5]), opts, jobs=2, chunksize=16)
    for fmt in ("table", "csv", "jsonl"):
        assert render(one, fmt) == render(two, fmt)


def test_jsonl_shape():
    report = run_census([(1, path(4))], CensusOptions(checks=("tf_ge_2",)))
    lines = [json.loads(x) for x in render(report, "jsonl").splitlines()]
    assert [x["type"] for x in lines] == ["meta", "graph", "check"]
    assert lines[1]["F_t"] == 2 and lines[1]["status"] == {"tf_ge_2": "pass"}
    with pytest.raises(ValueError):
        render(report, "xml")


def test_unknown_check_rejected():
    with pytest.raises(ValueError):
        CensusOptions(checks=("nope",))


def test_registry_descriptions():
    assert set(CHECK_IDS) == set(REGISTRY)
    assert all(REGISTRY[c].description for c in CHECK_IDS)


def test_invariants_row():
    row = compute_invariants(spider(3))
    assert row["F_t"] == 3 and row["gamma_P"] == 1 and row["packing_tf"] == 4
    assert row["packing_tf_literal"] is None
    iso = compute_invariants(Graph(3, [(0, 1)]))
    assert iso["F_t"] is None and iso["gamma_t"] is None and iso["F_c"] is None


def test_context_removals():
    ctx = GraphContext(spider(3), max_n=30)
    assert ctx.admissible_removals() == [0, 4, 5, 6]
    assert ctx.subgraph_tf(0) == 6
    assert ctx.subgraph_tf(4) == 3
    assert ctx.subgraph_tf(1) is None


def test_guard_error_becomes_input_error():
    report = run_census([(1, path(8))], CensusOptions(checks=("tf_ge_2",), max_n=6))
    assert report.graph_count == 0 and len(report.errors) == 1
