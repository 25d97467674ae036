"""Exact minimum-set solvers by cardinality-ascending subset search.

Every solver walks subsets in order of size and, within a size, in
lexicographic order of their sorted members, so the first hit is both minimum
and the lexicographically smallest minimum witness.

Two reductions keep the search small without changing the answer:

* twin classes (vertices with equal open or equal closed neighborhoods) are
  interchangeable by an automorphism, so only sets that fill each class
  lowest-id-first are tried;
* for total forcing, a vertex with two or more leaf neighbors and all but one
  of those leaves lie in every TF-set, so they are fixed up front
  (``use_leaf_rule``).

Both are exercised against the unreduced search in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

from ._bits import (
    closed_nbhd_mask,
    closure_mask,
    from_mask,
    has_isolate_in,
    is_connected_in,
    iter_bits,
    lowest,
    masks_by_size,
    open_nbhd_mask,
    popcount,
    power_fixpoint_mask,
)
from .errors import InfeasibleError
from .graph import SUBSET_GUARD, Graph, ball_masks, check_guard

FORCING_VARIANTS = ("plain", "total", "connected")
DOMINATION_VARIANTS = ("plain", "total", "connected", "two_step", "power")
PACKING_TIEBREAKS = ("paper_max_undominated", "min_undominated", "none")
ALL_MIN_CAP = 10**6
_TABLE_N = 16


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: frozenset[int]
    all_witnesses: tuple[frozenset[int], ...] | None = None
    truncated: bool = False


class WitnessList(list):
    """A list of witness sets that also records whether the output was capped."""

    truncated: bool = False


@dataclass
class ForcingCache:
    """Memo of forcing-closure outcomes keyed by mask, shared between solver calls on one graph."""

    graph: Graph
    table: dict[int, bool] = field(default_factory=dict)

    def forcing(self, mask: int) -> bool:
        hit = self.table.get(mask)
        if hit is None:
            hit = self.table[mask] = closure_mask(self.graph.adj, mask) == self.graph.full_mask
        return hit


# search machinery

def twin_classes(g: Graph) -> list[list[int]]:
    """Classes (size >= 2) of vertices sharing an open or a closed neighborhood."""
    groups: dict[tuple[str, int], list[int]] = {}
    for v, a in enumerate(g.adj):
        groups.setdefault(("open", a), []).append(v)
        groups.setdefault(("closed", a | 1 << v), []).append(v)
    return [sorted(vs) for vs in groups.values() if len(vs) >= 2]


def _prefix_filter(classes: list[list[int]]) -> Callable[[int], bool] | None:
    if not classes:
        return None
    specs = []
    for cls in classes:
        cmask = 0
        prefixes = {0}
        for v in cls:
            cmask |= 1 << v
            prefixes.add(cmask)
        specs.append((cmask, frozenset(prefixes)))

    def canonical(mask: int) -> bool:
        for cmask, prefixes in specs:
            if mask & cmask not in prefixes:
                return False
        return True

    return canonical


def _candidates(n: int, k: int, required: int, free: int) -> Iterator[int]:
    r = popcount(required)
    if k < r:
        return
    if required == 0 and free == (1 << n) - 1 and n <= _TABLE_N:
        yield from masks_by_size(n)[k]
        return
    bits = [1 << v for v in iter_bits(free)]
    for combo in combinations(bits, k - r):
        yield required | sum(combo)


def _ascending(
    g: Graph,
    accept: Callable[[int], bool],
    *,
    required: int = 0,
    free: int | None = None,
    symmetric: bool = True,
    lo: int = 0,
) -> tuple[int, int]:
    """Smallest (size, mask) accepted, scanning sizes upward from ``lo``."""
    n = g.n
    if free is None:
        free = g.full_mask & ~required
    canonical = _prefix_filter(twin_classes(g)) if symmetric else None
    for k in range(max(lo, popcount(required)), popcount(required | free) + 1):
        for mask in _candidates(n, k, required, free):
            if canonical is not None and not canonical(mask):
                continue
            if accept(mask):
                return k, mask
    raise InfeasibleError("no vertex set satisfies the predicate")


def connected_subsets(g: Graph, k: int) -> list[int]:
    """All vertex subsets of size ``k`` inducing a connected subgraph, grown by neighbor expansion."""
    if k == 0:
        return []
    out: list[int] = []
    for v in range(g.n):
        _grow_from(g.adj, v, k, (1 << (v + 1)) - 1, out)
    out.sort(key=lambda m: tuple(iter_bits(m)))
    return out


def _grow_from(adj: tuple[int, ...], root: int, k: int, forbidden: int, out: list[int]) -> None:
    # ESU-style enumeration: each connected set whose minimum vertex is ``root`` is produced once.
    def rec(current: int, extension: int, blocked: int, size: int) -> None:
        if size == k:
            out.append(current)
            return
        ext = extension
        while ext:
            low = ext & -ext
            ext ^= low
            w = low.bit_length() - 1
            nb = adj[w] & ~blocked & ~current
            rec(current | low, ext | nb, blocked | nb, size + 1)

    start = 1 << root
    nb = adj[root] & ~forbidden
    rec(start, nb, forbidden | start | nb, 1)


def _connected_search(g: Graph, accept: Callable[[int], bool]) -> tuple[int, int]:
    for k in range(1, g.n + 1):
        if g.n <= _TABLE_N:
            masks = (m for m in masks_by_size(g.n)[k] if is_connected_in(g.adj, m))
        else:
            masks = connected_subsets(g, k)
        for mask in masks:
            if accept(mask):
                return k, mask
    raise InfeasibleError("no connected vertex set satisfies the predicate")


def leaf_rule_required(g: Graph) -> int:
    """Vertices forced into every TF-set: supports of two or more leaves, and all but their highest-id leaf."""
    req = 0
    for v, a in enumerate(g.adj):
        lv = [u for u in iter_bits(a) if popcount(g.adj[u]) == 1]
        if len(lv) >= 2:
            req |= 1 << v
            for u in lv[:-1]:
                req |= 1 << u
    return req


# public solvers

def _result(k: int, mask: int) -> SolveResult:
    return SolveResult(k, from_mask(mask))


def min_forcing(
    g: Graph,
    variant: str = "total",
    *,
    max_n: int = SUBSET_GUARD,
    override_guard: bool = False,
    use_leaf_rule: bool = True,
    symmetric: bool = True,
    cache: ForcingCache | None = None,
) -> SolveResult:
    """Minimum forcing / total forcing / connected forcing set of ``g``."""
    if variant not in FORCING_VARIANTS:
        raise ValueError(f"unknown forcing variant {variant!r}")
    check_guard(g, max_n, override_guard)
    if g.n == 0:
        return SolveResult(0, frozenset())
    adj = g.adj
    if cache is None:
        cache = ForcingCache(g)
    forcing = cache.forcing

    if variant == "plain":
        k, mask = _ascending(g, forcing, lo=1, symmetric=symmetric)
    elif variant == "total":
        if not all(adj):
            raise InfeasibleError("total forcing is undefined on a graph with an isolated vertex")
        required = leaf_rule_required(g) if use_leaf_rule else 0
        k, mask = _ascending(
            g,
            lambda m: not has_isolate_in(adj, m) and forcing(m),
            required=required,
            symmetric=symmetric,
            lo=2,
        )
    else:
        k, mask = _connected_search(g, forcing)
    return _result(k, mask)


def min_domination(
    g: Graph,
    variant: str = "plain",
    *,
    max_n: int = SUBSET_GUARD,
    override_guard: bool = False,
    symmetric: bool = True,
) -> SolveResult:
    """Minimum dominating set for one of the variants in :data:`DOMINATION_VARIANTS`."""
    if variant not in DOMINATION_VARIANTS:
        raise ValueError(f"unknown domination variant {variant!r}")
    check_guard(g, max_n, override_guard)
    if g.n == 0:
        return SolveResult(0, frozenset())
    adj = g.adj
    full = g.full_mask

    if variant == "plain":
        accept = lambda m: closed_nbhd_mask(adj, m) == full  # noqa: E731
    elif variant == "total":
        if not all(adj):
            raise InfeasibleError("total domination is undefined on a graph with an isolated vertex")
        accept = lambda m: open_nbhd_mask(adj, m) == full  # noqa: E731
    elif variant == "two_step":
        ball2 = ball_masks(g, 2)
        accept = lambda m: _or_of(ball2, m) == full  # noqa: E731
    elif variant == "power":
        accept = lambda m: power_fixpoint_mask(adj, m) == full  # noqa: E731
    else:
        k, mask = _connected_search(g, lambda m: closed_nbhd_mask(adj, m) == full)
        return _result(k, mask)
    k, mask = _ascending(g, accept, lo=1, symmetric=symmetric)
    return _result(k, mask)


def _or_of(masks: tuple[int, ...], sel: int) -> int:
    out = 0
    for v in iter_bits(sel):
        out |= masks[v]
    return out


def all_min_tf_sets(
    g: Graph,
    *,
    cap: int = ALL_MIN_CAP,
    max_n: int = SUBSET_GUARD,
    override_guard: bool = False,
    cache: ForcingCache | None = None,
) -> WitnessList:
    """Every minimum total forcing set, in lexicographic order, capped at ``cap`` entries."""
    check_guard(g, max_n, override_guard)
    if not all(g.adj):
        raise InfeasibleError("total forcing is undefined on a graph with an isolated vertex")
    out = WitnessList()
    if g.n == 0:
        out.append(frozenset())
        return out
    cache = cache or ForcingCache(g)
    value = min_forcing(g, "total", max_n=max_n, override_guard=override_guard, cache=cache).value
    adj = g.adj
    for mask in _candidates(g.n, value, 0, g.full_mask):
        if not has_isolate_in(adj, mask) and cache.forcing(mask):
            if len(out) >= cap:
                out.truncated = True
                break
            out.append(from_mask(mask))
    return out


# packings

def enumerate_maximum_packings(g: Graph) -> list[int]:
    """All maximum-cardinality packings as masks, lexicographically ordered."""
    if g.n == 0:
        return [0]
    ball2 = ball_masks(g, 2)
    best: list[int] = []
    best_size = 0

    def rec(avail: int, chosen: int, size: int) -> None:
        nonlocal best, best_size
        if not avail:
            if size > best_size:
                best_size, best = size, [chosen]
            elif size == best_size:
                best.append(chosen)
            return
        if size + popcount(avail) < best_size:
            return
        low = avail & -avail
        v = low.bit_length() - 1
        rec(avail & ~ball2[v], chosen | low, size + 1)
        rec(avail & ~low, chosen, size)

    rec(g.full_mask, 0, 0)
    return best


def packing_key(g: Graph, mask: int, tiebreak: str) -> tuple:
    """Sort key: smaller is preferred among packings of equal size."""
    undominated = g.n - popcount(closed_nbhd_mask(g.adj, mask))
    degsum = sum(popcount(g.adj[v]) for v in iter_bits(mask))
    if tiebreak == "paper_max_undominated":
        return (-undominated, -degsum)
    if tiebreak == "min_undominated":
        return (undominated, -degsum)
    if tiebreak == "none":
        return ()
    raise ValueError(f"unknown packing tiebreak {tiebreak!r}")


def maximum_packing(
    g: Graph,
    tiebreak: str = "paper_max_undominated",
    *,
    max_n: int = SUBSET_GUARD,
    override_guard: bool = False,
) -> SolveResult:
    """A maximum packing chosen by ``tiebreak``.

    ``paper_max_undominated`` prefers the most undominated vertices, then the
    largest degree sum; ``min_undominated`` prefers the fewest undominated
    vertices, then the largest degree sum; ``none`` takes the first found.
    Remaining ties go to the lexicographically smallest packing.
    """
    check_guard(g, max_n, override_guard)
    packings = enumerate_maximum_packings(g)
    key = lambda m: packing_key(g, m, tiebreak)  # noqa: E731
    best = min(packings, key=key)  # min is stable, so lexicographic order breaks ties
    return SolveResult(popcount(best), from_mask(best))


def greedy_maximal_packing(g: Graph) -> int:
    """Inclusion-maximal packing, high degree first (ties by id)."""
    ball2 = ball_masks(g, 2)
    order = sorted(range(g.n), key=lambda v: (-popcount(g.adj[v]), v))
    chosen = 0
    blocked = 0
    for v in order:
        if not blocked >> v & 1:
            chosen |= 1 << v
            blocked |= ball2[v]
    return chosen


def is_perfect_dominating_with_max_degree(g: Graph) -> bool:
    """Whether some perfect packing (perfect dominating set) consists only of maximum-degree vertices."""
    full = g.full_mask
    delta = max((popcount(a) for a in g.adj), default=0)
    cands = [v for v in range(g.n) if popcount(g.adj[v]) == delta]
    closed = [g.adj[v] | 1 << v for v in range(g.n)]

    def rec(covered: int) -> bool:
        if covered == full:
            return True
        # the lowest uncovered vertex must be covered by exactly one chosen closed neighborhood
        u = lowest(full & ~covered)
        for v in cands:
            if closed[v] >> u & 1 and not closed[v] & covered:
                if rec(covered | closed[v]):
                    return True
        return False

    return rec(0)
