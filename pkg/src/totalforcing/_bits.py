"""Bitset primitives. A vertex set over ``0..n-1`` is a Python int; bit ``v`` set iff ``v`` is a member."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_mask(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def closed_nbhd_mask(adj: tuple[int, ...], mask: int) -> int:
    out = mask
    for v in iter_bits(mask):
        out |= adj[v]
    return out


def open_nbhd_mask(adj: tuple[int, ...], mask: int) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= adj[v]
    return out


def closure_mask(adj: tuple[int, ...], colored: int) -> int:
    """Final colored set of the forcing process (firing order is irrelevant to the result)."""
    changed = True
    while changed:
        changed = False
        m = colored
        while m:
            low = m & -m
            m ^= low
            un = adj[low.bit_length() - 1] & ~colored
            if un and not un & (un - 1):
                colored |= un
                changed = True
    return colored


def power_fixpoint_mask(adj: tuple[int, ...], s: int) -> int:
    """Fixpoint of the monitoring recursion, computed layer by layer (no forcing shortcut)."""
    layer = closed_nbhd_mask(adj, s)
    while True:
        nxt = 0
        m = layer
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            closed = adj[v] | low
            out = closed & ~layer
            if not out & (out - 1):
                nxt |= closed
        if nxt == layer:
            return layer
        layer = nxt


def has_isolate_in(adj: tuple[int, ...], mask: int) -> bool:
    """True iff some member of ``mask`` has no neighbor inside ``mask``."""
    m = mask
    while m:
        low = m & -m
        m ^= low
        if not adj[low.bit_length() - 1] & mask:
            return True
    return False


def is_connected_in(adj: tuple[int, ...], mask: int) -> bool:
    if not mask:
        return False
    seen = mask & -mask
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


@lru_cache(maxsize=None)
def masks_by_size(n: int) -> tuple[tuple[int, ...], ...]:
    """All subsets of ``0..n-1`` grouped by cardinality, each group in lexicographic order."""
    bits = [1 << i for i in range(n)]
    return tuple(tuple(sum(c) for c in combinations(bits, k)) for k in range(n + 1))
