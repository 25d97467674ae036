"""Named graph families and exhaustive/random graph streams."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Callable, Iterator

from ._bits import is_connected_in
from .graph import Graph, disjoint_union

MAX_ENUM_N = 7


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    _need(n >= 0, f"empty graph needs n >= 0, got {n}")
    return Graph(n)


def star(k: int) -> Graph:
    """``K_{1,k}``: center 0, leaves ``1..k``."""
    _need(k >= 1, f"star needs k >= 1, got {k}")
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def spider(k: int) -> Graph:
    """``K_{1,k}`` with each edge subdivided once: center 0, middles ``1..k``, leaf ``k+i`` hangs off middle ``i``."""
    _need(k >= 1, f"spider needs k >= 1, got {k}")
    edges = [(0, i) for i in range(1, k + 1)] + [(i, k + i) for i in range(1, k + 1)]
    return Graph(2 * k + 1, edges)


FIG1B_LABELS = ("v1", "v2", "v3", "u1", "u2", "u5", "u6")
"""Vertex names of :func:`fig1b` by id. ``v1`` is the attachment vertex used by :func:`fig1b_chain`."""


def fig1b() -> Graph:
    """Seven-vertex tree: ``v1`` and ``v3`` each carry two leaves and are joined through ``v2``."""
    return Graph(7, [(0, 3), (0, 4), (0, 1), (1, 2), (2, 5), (2, 6)])


def fig1b_chain(k: int) -> Graph:
    """``k`` copies of :func:`fig1b` (copy ``j`` on ids ``7j..7j+6``) with consecutive ``v1`` vertices joined."""
    _need(k >= 1, f"fig1b_chain needs k >= 1, got {k}")
    base = disjoint_union(*[fig1b()] * k)
    edges = base.edges() + [(7 * j, 7 * (j + 1)) for j in range(k - 1)]
    return Graph(7 * k, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, "complete bipartite needs both sides >= 1")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def from_edges(n: int, edges) -> Graph:
    return Graph(n, edges)


FAMILIES: dict[str, Callable[..., Graph]] = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "empty": empty,
    "star": star,
    "spider": spider,
    "fig1b": fig1b,
    "fig1b_chain": fig1b_chain,
    "complete_bipartite": complete_bipartite,
    "petersen": petersen,
    "edges": from_edges,
}


def generate(family: str, *params) -> Graph:
    """Build a member of a named family, e.g. ``generate("spider", 3)``."""
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    try:
        return builder(*params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {family}: {exc}") from None


def all_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labelled graph on ``n`` vertices, once each, ordered by edge bitmask."""
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"labelled enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    pairs = list(combinations(range(n), 2))
    bits = [((1 << u) | (1 << v), u, v) for u, v in pairs]
    full = (1 << n) - 1
    for code in range(1 << len(pairs)):
        if code.bit_count() < n - 1:
            continue
        adj = [0] * n
        c = code
        i = 0
        while c:
            if c & 1:
                _, u, v = bits[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            c >>= 1
            i += 1
        if is_connected_in(adj, full):
            yield Graph._trusted(tuple(adj))


def random_connected_graph(n: int, rng: random.Random, extra_edge_prob: float | None = None) -> Graph:
    """Random spanning tree on ``n`` vertices plus independent extra edges."""
    _need(n >= 1, "random graph needs n >= 1")
    if extra_edge_prob is None:
        extra_edge_prob = rng.choice([0.0, 1.0 / n, 2.0 / n, 4.0 / n, 0.1, 0.3])
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < extra_edge_prob:
            edges.add((u, v))
    return Graph(n, sorted(edges))
