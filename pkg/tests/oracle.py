"""Slow, direct reference implementations used to cross-check the package.

Everything here works on networkx graphs with plain Python sets and tries
every subset without pruning, so it shares no code or tricks with the
package under test.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def closure(h: nx.Graph, s) -> set:
    colored = set(s)
    while True:
        for v in sorted(colored):
            un = [w for w in h[v] if w not in colored]
            if len(un) == 1:
                colored.add(un[0])
                break
        else:
            return colored


def is_forcing(h, s) -> bool:
    return len(h) == 0 or (len(s) > 0 and closure(h, s) == set(h))


def is_total_forcing(h, s) -> bool:
    return is_forcing(h, s) and all(any(w in s for w in h[v]) for v in s)


def is_connected_forcing(h, s) -> bool:
    return is_forcing(h, s) and len(s) > 0 and nx.is_connected(h.subgraph(s))


def power_dominated(h, s) -> set:
    obs = set(s)
    for v in s:
        obs |= set(h[v])
    while True:
        new = set(obs)
        for v in obs:
            closed = set(h[v]) | {v}
            if len(closed - obs) <= 1:
                new |= closed
        if new == obs:
            return obs
        obs = new


PREDICATES = {
    "F": is_forcing,
    "F_t": is_total_forcing,
    "F_c": is_connected_forcing,
    "gamma": lambda h, s: set(s).union(*(set(h[v]) for v in s)) == set(h),
    "gamma_t": lambda h, s: set().union(*(set(h[v]) for v in s)) == set(h),
    "gamma_c": lambda h, s: len(s) > 0 and nx.is_dominating_set(h, s) and nx.is_connected(h.subgraph(s)),
    "gamma_2": lambda h, s: all(
        any(nx.has_path(h, v, u) and nx.shortest_path_length(h, v, u) <= 2 for u in s) for v in h
    ),
    "gamma_P": lambda h, s: power_dominated(h, s) == set(h),
}


def minimum(h: nx.Graph, name: str) -> int:
    pred = PREDICATES[name]
    for k in range(len(h) + 1):
        for s in combinations(sorted(h), k):
            if (k > 0 or len(h) == 0) and pred(h, set(s)):
                return k
    raise ValueError(f"no set satisfies {name}")


def all_minimum_tf(h: nx.Graph) -> list[frozenset]:
    k = minimum(h, "F_t")
    return [frozenset(s) for s in combinations(sorted(h), k) if is_total_forcing(h, set(s))]


def maximum_packings(h: nx.Graph) -> list[frozenset]:
    dist = dict(nx.all_pairs_shortest_path_length(h))
    best: list[frozenset] = []
    for k in range(len(h), 0, -1):
        for s in combinations(sorted(h), k):
            if all(dist[u].get(v, 99) >= 3 for u, v in combinations(s, 2)):
                best.append(frozenset(s))
        if best:
            return best
    return [frozenset()]


def connected_labelled_count(n: int) -> int:
    pairs = list(combinations(range(n), 2))
    count = 0
    for code in range(1 << len(pairs)):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(p for i, p in enumerate(pairs) if code >> i & 1)
        count += nx.is_connected(h)
    return count
