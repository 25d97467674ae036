"""Simple undirected graphs over dense vertex ids, plus the structural predicates the rest of the package needs.

Neighbor sets are stored as int bitsets (``Graph.adj``), so membership, union
and popcount cost O(n / word size). Vertex sets in the public API are
``frozenset[int]``; internally everything is a mask.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable

from ._bits import closed_nbhd_mask, from_mask, is_connected_in, iter_bits, open_nbhd_mask, popcount, to_mask
from .errors import GuardError

VertexSet = frozenset
"""Alias used in signatures: a frozen set of vertex ids."""

SUBSET_GUARD = 30
"""Largest order on which subset-enumerating operations run without an explicit override."""


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> Graph:
        """Build from adjacency bitsets; symmetry and loop-freeness are checked."""
        adj = tuple(masks)
        n = len(adj)
        full = (1 << n) - 1
        for v, m in enumerate(adj):
            if m & ~full or m >> v & 1:
                raise ValueError(f"bad adjacency mask for vertex {v}")
            for u in iter_bits(m):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        g = cls.__new__(cls)
        g._n = n
        g._adj = adj
        return g

    @classmethod
    def _trusted(cls, adj: tuple[int, ...]) -> Graph:
        g = cls.__new__(cls)
        g._n = len(adj)
        g._adj = adj
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitsets."""
        return self._adj

    @property
    def m(self) -> int:
        return sum(popcount(a) for a in self._adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return from_mask(self._adj[v])

    def degree(self, v: int) -> int:
        return popcount(self._adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self._n) for v in iter_bits(self._adj[u]) if u < v]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"


def check_vertex_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Validate ``s`` against ``g`` and return it as a frozenset."""
    out = frozenset(s)
    for v in out:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise ValueError(f"vertex {v!r} not in graph of order {g.n}")
    return out


def check_guard(g: Graph, max_n: int = SUBSET_GUARD, override: bool = False) -> None:
    if g.n > max_n and not override:
        raise GuardError(f"graph order {g.n} exceeds subset-search guard {max_n}; pass override_guard=True")


# neighborhoods and degrees

def open_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    return from_mask(open_nbhd_mask(g.adj, to_mask(s)))


def closed_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    return from_mask(closed_nbhd_mask(g.adj, to_mask(s)))


def min_degree(g: Graph) -> int:
    return min(g.degrees(), default=0)


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def leaves(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == 1]


def is_connected(g: Graph) -> bool:
    """Connectivity; the empty graph counts as connected."""
    return g.n == 0 or is_connected_in(g.adj, g.full_mask)


def is_isolate_free(g: Graph) -> bool:
    return all(g.adj)


# distances

def bfs_distances(g: Graph, source: int) -> list[float]:
    """Shortest-path lengths from ``source``; ``math.inf`` for unreachable vertices."""
    if not 0 <= source < g.n:
        raise ValueError(f"vertex {source} not in graph of order {g.n}")
    dist: list[float] = [math.inf] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in iter_bits(g.adj[u]):
            if dist[w] == math.inf:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> float:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} not in graph of order {g.n}")
    return bfs_distances(g, u)[v]


def diameter(g: Graph) -> float:
    return max((max(bfs_distances(g, v)) for v in range(g.n)), default=0)


def ball_masks(g: Graph, radius: int) -> tuple[int, ...]:
    """For each vertex, the bitset of vertices within ``radius`` of it."""
    out = []
    for v in range(g.n):
        ball = 1 << v
        for _ in range(radius):
            ball = closed_nbhd_mask(g.adj, ball)
        out.append(ball)
    return tuple(out)


# packings

def _packing_mask(g: Graph, p: int) -> bool:
    ball2 = ball_masks(g, 2)
    return all(not (ball2[v] & p & ~(1 << v)) for v in iter_bits(p))


def is_packing(g: Graph, p: Iterable[int]) -> bool:
    """Members pairwise at distance at least 3."""
    return _packing_mask(g, to_mask(check_vertex_set(g, p)))


def is_perfect_packing(g: Graph, p: Iterable[int]) -> bool:
    """A packing whose closed neighborhoods cover (and hence partition) the vertex set."""
    pm = to_mask(check_vertex_set(g, p))
    return _packing_mask(g, pm) and closed_nbhd_mask(g.adj, pm) == g.full_mask


# domination predicates

def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    return closed_nbhd_mask(g.adj, to_mask(s)) == g.full_mask


def is_total_dominating(g: Graph, s: Iterable[int]) -> bool:
    return open_nbhd_mask(g.adj, to_mask(s)) == g.full_mask


def is_connected_dominating(g: Graph, s: Iterable[int]) -> bool:
    m = to_mask(s)
    return closed_nbhd_mask(g.adj, m) == g.full_mask and is_connected_in(g.adj, m)


def is_two_dominating(g: Graph, s: Iterable[int]) -> bool:
    """Every vertex lies within distance 2 of ``s``."""
    m = to_mask(s)
    return closed_nbhd_mask(g.adj, closed_nbhd_mask(g.adj, m)) == g.full_mask


# derived graphs

def induced(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by ``s``, relabelled to ``0..|s|-1`` in increasing id order."""
    return induced_with_map(g, s)[0]


def induced_with_map(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    keep = sorted(check_vertex_set(g, s))
    index = {v: i for i, v in enumerate(keep)}
    keep_mask = to_mask(keep)
    masks = [to_mask(index[w] for w in iter_bits(g.adj[v] & keep_mask)) for v in keep]
    return Graph.from_masks(masks), index


def delete_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """``g - v`` with ids compacted; also returns the old-to-new id map."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} not in graph of order {g.n}")
    low = (1 << v) - 1
    adj = tuple((m & low) | (m >> (v + 1) << v) for u, m in enumerate(g.adj) if u != v)
    relabel = {u: u - (u > v) for u in range(g.n) if u != v}
    return Graph._trusted(adj), relabel


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return Graph(offset, edges)


# recognisers used by the census checks

def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_star(g: Graph) -> bool:
    """``K_{1,k}`` for some ``k >= 1`` (so ``K_2`` is a star)."""
    if g.n < 2 or g.m != g.n - 1:
        return False
    return max_degree(g) == g.n - 1


def is_path(g: Graph) -> bool:
    if g.n == 0 or not is_connected(g):
        return False
    return g.m == g.n - 1 and max_degree(g) <= 2


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(d == 2 for d in g.degrees())
