from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

import oracle
from test_graph import graphs
from totalforcing.errors import GuardError, InfeasibleError
from totalforcing.forcing import classify_set, is_power_dominating
from totalforcing.generators import (
    all_connected_graphs,
    complete,
    complete_bipartite,
    cycle,
    fig1b,
    path,
    petersen,
    random_connected_graph,
    spider,
    star,
)
from totalforcing.graph import (
    Graph,
    is_connected_dominating,
    is_dominating,
    is_packing,
    is_total_dominating,
    is_two_dominating,
)
from totalforcing.solvers import (
    all_min_tf_sets,
    connected_subsets,
    enumerate_maximum_packings,
    maximum_packing,
    min_domination,
    min_forcing,
)

NAMES = ("F", "F_t", "F_c", "gamma", "gamma_t", "gamma_c", "gamma_2", "gamma_P")
SOLVER = {
    "F": ("f", "plain"), "F_t": ("f", "total"), "F_c": ("f", "connected"),
    "gamma": ("d", "plain"), "gamma_t": ("d", "total"), "gamma_c": ("d", "connected"),
    "gamma_2": ("d", "two_step"), "gamma_P": ("d", "power"),
}

# Frozen from tests/oracle.py (unpruned networkx search); see test_oracle_table_is_current.
FROZEN = {
    "P3": (path(3), (1, 2, 1, 1, 2, 1, 1, 1)),
    "P4": (path(4), (1, 2, 1, 2, 2, 2, 1, 1)),
    "C4": (cycle(4), (2, 2, 2, 2, 2, 2, 1, 1)),
    "C5": (cycle(5), (2, 2, 2, 2, 3, 3, 1, 1)),
    "C6": (cycle(6), (2, 2, 2, 2, 4, 4, 2, 1)),
    "K4": (complete(4), (3, 3, 3, 1, 2, 1, 1, 1)),
    "K5": (complete(5), (4, 4, 4, 1, 2, 1, 1, 1)),
    "star4": (star(4), (3, 4, 4, 1, 2, 1, 1, 1)),
    "spider3": (spider(3), (2, 3, 3, 3, 4, 4, 1, 1)),
    "spider4": (spider(4), (3, 4, 4, 4, 5, 5, 1, 1)),
    "fig1b": (fig1b(), (3, 5, 5, 2, 3, 3, 1, 2)),
    "K33": (complete_bipartite(3, 3), (4, 4, 4, 2, 2, 2, 1, 2)),
    "petersen": (petersen(), (5, 5, 5, 3, 4, 4, 1, 2)),
}


def solve(g: Graph, name: str, **kw):
    kind, variant = SOLVER[name]
    fn = min_forcing if kind == "f" else min_domination
    return fn(g, variant, **kw)


def witness_ok(g: Graph, name: str, s) -> bool:
    if name == "F":
        return classify_set(g, s).forcing
    if name == "F_t":
        return classify_set(g, s).total_forcing
    if name == "F_c":
        return classify_set(g, s).connected_forcing
    return {
        "gamma": is_dominating, "gamma_t": is_total_dominating, "gamma_c": is_connected_dominating,
        "gamma_2": is_two_dominating, "gamma_P": is_power_dominating,
    }[name](g, s)


@pytest.mark.parametrize("label", sorted(FROZEN))
def test_frozen_values(label):
    g, expected = FROZEN[label]
    for name, value in zip(NAMES, expected):
        res = solve(g, name)
        assert res.value == value, (label, name)
        assert len(res.witness) == value and witness_ok(g, name, res.witness)


def test_oracle_table_is_current():
    # small entries only; the oracle is slow on the larger ones
    for label in ("P4", "C5", "star4", "spider3", "fig1b"):
        g, expected = FROZEN[label]
        h = oracle.to_nx(g)
        assert tuple(oracle.minimum(h, name) for name in NAMES) == expected


def test_witness_is_lexicographically_smallest():
    # P_4: {0,1} is the first 2-set that is a TF-set
    assert min_forcing(path(4), "total").witness == {0, 1}
    assert min_forcing(path(5), "plain").witness == {0}


def test_infeasible_and_guard():
    with pytest.raises(InfeasibleError):
        min_forcing(Graph(3, [(0, 1)]), "total")
    with pytest.raises(InfeasibleError):
        min_domination(Graph(3, [(0, 1)]), "total")
    with pytest.raises(GuardError):
        min_forcing(path(31), "total")
    assert min_forcing(path(31), "total", override_guard=True).value == 2
    with pytest.raises(ValueError):
        min_forcing(path(3), "bogus")


def test_empty_graph():
    assert min_forcing(Graph(0), "total").value == 0


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7))
def test_matches_oracle(g):
    h = oracle.to_nx(g)
    isolate_free = g.n > 0 and all(g.adj)
    connected = g.n > 0 and oracle.nx.is_connected(h)
    for name in NAMES:
        if name in ("F_t", "gamma_t") and not isolate_free:
            continue
        if name in ("F_c", "gamma_c") and not connected:
            continue
        assert solve(g, name).value == oracle.minimum(h, name), name


def test_pruning_does_not_change_values():
    rng = random.Random(11)
    cases = [random_connected_graph(rng.randint(3, 11), rng) for _ in range(60)] + [spider(4), star(5), fig1b()]
    for g in cases:
        for variant in ("plain", "total"):
            fast = min_forcing(g, variant)
            slow = min_forcing(g, variant, use_leaf_rule=False, symmetric=False)
            assert fast.value == slow.value
        assert min_domination(g, "power").value == min_domination(g, "power", symmetric=False).value


def test_fig1b_chain_values():
    from totalforcing.generators import fig1b_chain

    for k in (1, 2):
        assert min_forcing(fig1b_chain(k), "total").value == 5 * k


def test_connected_subsets_match_filter():
    g = random_connected_graph(18, random.Random(4))
    for k in (1, 2, 3, 4):
        subs = connected_subsets(g, k)
        assert len(subs) == len(set(subs))
        for m in subs:
            assert bin(m).count("1") == k


def test_all_min_tf_sets_examples():
    assert all_min_tf_sets(path(3)) == [{0, 1}, {1, 2}]
    assert all_min_tf_sets(complete(3)) == [{0, 1}, {0, 2}, {1, 2}]
    sets = all_min_tf_sets(star(3))
    assert sets == [{0, 1, 2}, {0, 1, 3}, {0, 2, 3}]
    assert not sets.truncated


def test_all_min_tf_sets_matches_oracle():
    for g in list(all_connected_graphs(5))[::7]:
        assert set(all_min_tf_sets(g)) == set(oracle.all_minimum_tf(oracle.to_nx(g)))


def test_all_min_cap():
    out = all_min_tf_sets(complete(6), cap=3)
    assert len(out) == 3 and out.truncated


def test_packings():
    g = spider(3)
    assert maximum_packing(g, "paper_max_undominated").witness == {4, 5, 6}
    assert maximum_packing(g, "min_undominated").witness == {1, 5, 6}
    assert maximum_packing(complete(5), "none").value == 1
    with pytest.raises(ValueError):
        maximum_packing(g, "bogus")


def test_packings_match_oracle():
    for g in list(all_connected_graphs(5))[::5] + [spider(3), fig1b(), petersen()]:
        ours = enumerate_maximum_packings(g)
        assert {frozenset(i for i in range(g.n) if m >> i & 1) for m in ours} == set(oracle.maximum_packings(oracle.to_nx(g)))
        for m in ours:
            assert is_packing(g, [i for i in range(g.n) if m >> i & 1])


def test_ore_and_aim_sanity():
    for g in all_connected_graphs(5):
        if g.n >= 2:
            assert 2 * min_domination(g).value <= g.n
        assert min_forcing(g, "plain").value >= min(g.degrees())
