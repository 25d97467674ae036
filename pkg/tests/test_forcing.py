from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from test_graph import graphs
from totalforcing._bits import closed_nbhd_mask, from_mask, to_mask
from totalforcing.forcing import (
    ForcingChronology,
    classify_set,
    forcing_closure,
    is_forcing,
    is_power_dominating,
    is_total_forcing,
    power_closure,
)
from totalforcing.generators import all_connected_graphs, complete, cycle, path, spider
from totalforcing.graph import Graph


def test_path_leaf_forces_everything():
    ch = forcing_closure(path(4), {0})
    assert ch.final == frozenset(range(4))
    assert ch.steps == ((0, 1), (1, 2), (2, 3))


def test_triangle_single_vertex_stuck():
    ch = forcing_closure(complete(3), {0})
    assert ch.final == {0} and ch.steps == ()


def test_full_set_no_steps():
    ch = forcing_closure(cycle(5), range(5))
    assert ch.final == frozenset(range(5)) and ch.steps == ()


def test_classify_examples():
    assert classify_set(path(4), {0, 1}) == (True, True, True)
    assert classify_set(path(4), {0}) == (True, False, True)
    c = classify_set(cycle(5), {0, 2})
    # frozen from the set-based oracle: {0, 2} on C_5 is stuck
    assert oracle.closure(oracle.to_nx(cycle(5)), {0, 2}) == {0, 2}
    assert c == (False, False, False)


def test_classify_edge_cases():
    assert classify_set(Graph(0), set()) == (True, True, True)
    assert classify_set(path(3), set()) == (False, False, False)
    # a single vertex never induces an isolate-free subgraph
    assert not is_total_forcing(path(2), {0})
    assert is_forcing(path(2), {0})


def test_vertex_validation():
    with pytest.raises(ValueError):
        forcing_closure(path(3), {3})


def test_chronology_text_round_trip():
    ch = forcing_closure(spider(3), {0, 1, 2, 4})
    text = ch.to_text()
    assert text == "0->3\n2->5\n3->6\n"
    assert ForcingChronology.parse_steps(text) == ch.steps
    assert ch.replay(spider(3)) == ch.final


def test_replay_rejects_illegal_step():
    bad = ForcingChronology(frozenset({0}), frozenset({0, 1, 2}), ((0, 1),))
    with pytest.raises(ValueError):
        bad.replay(complete(3))
    with pytest.raises(ValueError):
        ForcingChronology.parse_steps("0 1\n")


def test_power_examples():
    for n in range(3, 11):
        for v in range(n):
            assert is_power_dominating(cycle(n), {v})
    tr = power_closure(cycle(6), range(6))
    assert tr.layers == (frozenset(range(6)),)
    tr = power_closure(spider(3), {0})
    assert tr.layers[0] == {0, 1, 2, 3}
    assert tr.fixpoint == frozenset(range(7))


def test_power_layers_monotone():
    rng = random.Random(2)
    for g in all_connected_graphs(5):
        s = {rng.randrange(5)}
        tr = power_closure(g, s)
        for a, b in zip(tr.layers, tr.layers[1:]):
            assert a < b
        assert tr.fixpoint == tr.layers[-1]


def test_power_matches_oracle():
    for g in all_connected_graphs(5):
        h = oracle.to_nx(g)
        for k in (1, 2):
            for s in combinations(range(5), k):
                assert power_closure(g, s).fixpoint == oracle.power_dominated(h, set(s))


def test_power_lemma_exhaustive_small():
    for n in range(1, 6):
        for g in all_connected_graphs(n):
            for m in range(1 << n):
                s = from_mask(m)
                nbhd = from_mask(closed_nbhd_mask(g.adj, m))
                assert is_power_dominating(g, s) == classify_set(g, nbhd).forcing


def test_monotone_exhaustive_n5():
    for g in all_connected_graphs(5):
        final = {m: to_mask(forcing_closure(g, from_mask(m)).final) for m in range(32)}
        for s in range(32):
            for t in range(32):
                if s & t == s:
                    assert final[s] & final[t] == final[s]


@settings(max_examples=150)
@given(graphs(max_n=10), st.data())
def test_closure_order_independent(g, data):
    s = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    base = forcing_closure(g, s).final
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    for _ in range(3):
        ch = forcing_closure(g, s, rng=rng)
        assert ch.final == base
        assert ch.replay(g) == base


@settings(max_examples=150)
@given(graphs(max_n=10), st.data())
def test_closure_matches_oracle_and_is_idempotent(g, data):
    s = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    final = forcing_closure(g, s).final
    assert final == oracle.closure(oracle.to_nx(g), s)
    assert forcing_closure(g, final).final == final
    ch = forcing_closure(g, s)
    assert final == ch.initial | {w for _, w in ch.steps}
    assert len({w for _, w in ch.steps}) == len(ch.steps)
