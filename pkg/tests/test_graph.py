from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracle import connected_labelled_count
from totalforcing.errors import GuardError
from totalforcing.generators import (
    FIG1B_LABELS,
    all_connected_graphs,
    complete,
    cycle,
    fig1b,
    fig1b_chain,
    generate,
    path,
    random_connected_graph,
    spider,
    star,
)
from totalforcing.graph import (
    Graph,
    ball_masks,
    check_guard,
    delete_vertex,
    diameter,
    distance,
    disjoint_union,
    induced,
    is_complete,
    is_connected,
    is_cycle,
    is_isolate_free,
    is_packing,
    is_path,
    is_perfect_packing,
    is_star,
    max_degree,
    min_degree,
)


@st.composite
def graphs(draw, max_n: int = 9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, chosen) if keep])


def test_rejects_loops_and_bad_ids():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph.from_masks([0b10, 0b00])


def test_duplicate_edges_collapse():
    g = Graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_spider_shape():
    g = spider(3)
    assert g.n == 7 and g.m == 6
    assert g.degree(0) == 3
    assert sorted(g.degrees()) == [1, 1, 1, 2, 2, 2, 3]


def test_fig1b_edges_match_labels():
    g = fig1b()
    lab = FIG1B_LABELS
    named = {frozenset((lab[u], lab[v])) for u, v in g.edges()}
    assert named == {frozenset(p) for p in [("v1", "u1"), ("v1", "u2"), ("v1", "v2"), ("v2", "v3"), ("v3", "u5"), ("v3", "u6")]}


def test_fig1b_chain_size():
    for k in (1, 2, 3):
        g = fig1b_chain(k)
        assert g.n == 7 * k and g.m == 6 * k + (k - 1)
        assert is_connected(g)


def test_path_one_is_k1():
    g = path(1)
    assert g.n == 1 and g.m == 0


@pytest.mark.parametrize("family,params", [("cycle", (2,)), ("spider", (0,)), ("star", (0,)), ("nope", ())])
def test_generate_rejects_bad_input(family, params):
    with pytest.raises(ValueError):
        generate(family, *params)


def test_distance_examples():
    assert distance(path(4), 0, 3) == 3
    assert distance(path(4), 2, 2) == 0
    g = disjoint_union(path(2), path(2))
    assert distance(g, 0, 3) == math.inf
    assert diameter(cycle(6)) == 3


def test_packing_examples():
    g = spider(3)
    assert is_packing(g, {4, 5, 6}) and not is_perfect_packing(g, {4, 5, 6})
    assert is_perfect_packing(g, {1, 5, 6})
    assert is_packing(g, {2})
    assert not is_packing(g, {0, 1})


def test_structural_examples():
    assert is_isolate_free(complete(2))
    h, relabel = delete_vertex(spider(3), 0)
    assert h.n == 6 and h.m == 3 and max_degree(h) == 1 and min_degree(h) == 1
    assert relabel == {i: i - 1 for i in range(1, 7)}
    k2 = induced(cycle(4), {1, 2})
    assert k2.n == 2 and k2.m == 1


def test_recognisers():
    assert is_star(star(1)) and is_star(path(3)) and is_star(star(5))
    assert not is_star(path(4))
    assert is_path(path(1)) and is_path(path(5)) and not is_path(cycle(4))
    assert is_cycle(cycle(3)) and not is_cycle(path(3))
    assert is_complete(complete(4)) and is_complete(path(2))


def test_guard():
    check_guard(path(30))
    with pytest.raises(GuardError):
        check_guard(path(31))
    check_guard(path(31), override=True)


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 1), (3, 4), (4, 38)])
def test_connected_counts_small(n, expected):
    assert sum(1 for _ in all_connected_graphs(n)) == expected


def test_connected_counts_match_brute_force():
    for n in range(1, 6):
        assert sum(1 for _ in all_connected_graphs(n)) == connected_labelled_count(n)


def test_connected_count_n6():
    assert sum(1 for _ in all_connected_graphs(6)) == 26704


def test_enumeration_range():
    with pytest.raises(ValueError):
        list(all_connected_graphs(0))
    with pytest.raises(ValueError):
        list(all_connected_graphs(8))


def test_n3_graphs_are_three_paths_and_triangle():
    gs = list(all_connected_graphs(3))
    assert sorted(g.m for g in gs) == [2, 2, 2, 3]
    assert len(set(gs)) == 4


def test_random_connected():
    rng = random.Random(5)
    for _ in range(50):
        g = random_connected_graph(rng.randint(1, 40), rng)
        assert is_connected(g)


@given(graphs())
def test_adjacency_symmetric_and_loop_free(g):
    for v, m in enumerate(g.adj):
        assert not m >> v & 1
        for u in range(g.n):
            assert (m >> u & 1) == (g.adj[u] >> v & 1)


@given(graphs(), st.data())
def test_delete_vertex_consistent(g, data):
    if g.n == 0:
        return
    v = data.draw(st.integers(0, g.n - 1))
    h, relabel = delete_vertex(g, v)
    assert h.n == g.n - 1
    assert h.m == g.m - g.degree(v)
    for a, b in g.edges():
        if v not in (a, b):
            assert h.has_edge(relabel[a], relabel[b])


@settings(max_examples=60)
@given(graphs(max_n=8))
def test_distance_axioms(g):
    for u in range(g.n):
        for v in range(g.n):
            d = distance(g, u, v)
            assert (d == 1) == g.has_edge(u, v)
            assert d == distance(g, v, u)
            for w in range(g.n):
                assert distance(g, u, w) <= d + distance(g, v, w)


@settings(max_examples=60)
@given(graphs(max_n=8), st.data())
def test_perfect_packing_implies_packing(g, data):
    s = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    if is_perfect_packing(g, s):
        assert is_packing(g, s)


def test_ball_masks_radius_two():
    balls = ball_masks(path(5), 2)
    assert balls[0] == 0b00111 and balls[2] == 0b11111
