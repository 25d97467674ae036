from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings

from oracle import to_nx
from test_graph import graphs
from totalforcing.errors import Graph6Error
from totalforcing.generators import complete, cycle, fig1b_chain, path, petersen, random_connected_graph, spider
from totalforcing.graph import Graph
from totalforcing.graph6 import iter_graph6, parse_graph6, read_graph6_file, write_graph6


def test_k2():
    g = parse_graph6("A_")
    assert g.n == 2 and list(g.edges()) == [(0, 1)]
    assert write_graph6(complete(2)) == "A_"


def test_empty():
    g = parse_graph6("?")
    assert g.n == 0
    assert write_graph6(Graph(0)) == "?"


def test_triangle():
    assert parse_graph6("Bw") == complete(3)
    assert write_graph6(complete(3)) == "Bw"


def test_header_prefix_accepted():
    assert parse_graph6(">>graph6<<Bw") == complete(3)


def test_c4_round_trip():
    s = write_graph6(cycle(4))
    assert parse_graph6(s) == cycle(4)


@pytest.mark.parametrize(
    "text,offset",
    [
        ("B!", 1),          # byte below 63
        ("", 0),            # nothing at all
        ("C", 1),           # 4 vertices need one more byte
        ("Bww", 2),         # trailing garbage
        ("Bx", 1),          # nonzero padding bit
        ("~?", 2),          # truncated 4-byte size header
        ("~~??", 4),        # truncated 8-byte size header
    ],
)
def test_errors_name_offset(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_large_orders_use_long_headers():
    g = path(63)
    s = write_graph6(g)
    assert s[0] == "~" and parse_graph6(s) == g
    big = Graph(300, [(0, 299)])
    assert parse_graph6(write_graph6(big)) == big


def test_matches_networkx_encoder():
    rng = random.Random(3)
    for _ in range(200):
        g = random_connected_graph(rng.randint(1, 70), rng)
        ours = write_graph6(g)
        theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert ours == theirs
        h = nx.from_graph6_bytes(ours.encode())
        assert sorted(map(sorted, h.edges())) == sorted(map(list, g.edges()))


@settings(max_examples=200)
@given(graphs(max_n=12))
def test_round_trip_property(g):
    assert parse_graph6(write_graph6(g)) == g


def test_families_round_trip():
    for g in (petersen(), spider(6), fig1b_chain(3), complete(10)):
        assert parse_graph6(write_graph6(g)) == g


def test_iter_reports_bad_lines_and_continues(tmp_path):
    p = tmp_path / "c.g6"
    p.write_text("Bw\n\nC!\nA_\n")
    items = read_graph6_file(p)
    assert [pos for pos, _ in items] == [1, 3, 4]
    assert isinstance(items[1][1], Graph6Error)
    assert items[2][1] == complete(2)
    assert len(list(iter_graph6(["A_", "A_"]))) == 2
