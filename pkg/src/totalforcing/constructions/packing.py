"""Packing-based TF-set of size at most ``Delta / (Delta + 1) * n`` for connected graphs.

Outline of the construction for ``Delta >= 3``:

1. choose a maximum packing ``v_1..v_k`` (or an inclusion-maximal one on large
   graphs); ``A_i = N(v_i)``, and the vertices outside ``N[P]`` are split into
   ``B_1..B_k``, ``B_i`` taking those with a neighbor in ``A_i`` but none in an
   earlier ``A_j``;
2. packing vertices of degree at least 2, or with ``B_i`` nonempty, are moved
   to the front (the first ``r``); the rest are leaves whose neighbor sits in
   ``A'``;
3. each of the first ``r`` blocks ``G_i = G[N[v_i] | B_i]`` gets a local TF-set
   ``S_i`` by one of three cases, leaving at most one neighbor ``w_i`` of
   ``v_i`` uncolored;
4. the leaf blocks are handled jointly: ``A''`` are the vertices of ``A'`` with
   no neighbor in ``A' | S'``, ``C`` a minimal dominator of ``A''``, ``A'''``
   private neighbors of ``C`` in ``A''``, and ``S'' = C | (A' - A''')``.

The result is always checked by the forcing engine. With ``repair=True`` a
failed check triggers the fallbacks described on :func:`packing_tf`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .._bits import closure_mask, from_mask, has_isolate_in, iter_bits, lowest, popcount
from ..errors import ConstructionError, PreconditionError
from ..graph import SUBSET_GUARD, Graph, is_connected, max_degree
from ..solvers import enumerate_maximum_packings, greedy_maximal_packing, packing_key
from .certificate import ConstructionCertificate, certify

TIEBREAKS = ("paper_max_undominated", "min_undominated", "none")


@dataclass
class BlockCase:
    """Per-block record for one of the first ``r`` packing vertices (all sets are masks)."""

    vertex: int
    case: str
    A: int
    B: int
    D: int = 0
    D_private: int = 0
    L: int = 0
    w: int | None = None
    S: int = 0


@dataclass
class PackingDecomposition:
    """Everything the construction derived from the chosen packing (sets are masks)."""

    packing: tuple[int, ...]
    tiebreak: str
    pool: str
    A: tuple[int, ...] = ()
    B: tuple[int, ...] = ()
    r: int = 0
    blocks: list[BlockCase] = field(default_factory=list)
    P_rest: int = 0
    A_rest: int = 0
    A_isolated: int = 0
    C: int = 0
    A_private: int = 0
    S_blocks: int = 0
    S_rest: int = 0
    S: int = 0
    failure: str | None = None

    def describe(self) -> dict:
        sets = lambda m: sorted(from_mask(m))  # noqa: E731
        return {
            "packing": list(self.packing),
            "tiebreak": self.tiebreak,
            "pool": self.pool,
            "r": self.r,
            "blocks": [
                {"v": b.vertex, "case": b.case, "A": sets(b.A), "B": sets(b.B), "D": sets(b.D),
                 "D_private": sets(b.D_private), "w": b.w, "S": sets(b.S)}
                for b in self.blocks
            ],
            "A'": sets(self.A_rest),
            "A''": sets(self.A_isolated),
            "C": sets(self.C),
            "A'''": sets(self.A_private),
            "S": sets(self.S),
            "failure": self.failure,
        }


def _minimal_dominator(adj: tuple[int, ...], pool: int, target: int, exact: bool) -> int | None:
    """Subset of ``pool`` dominating ``target`` that is inclusion-minimal (or minimum if ``exact``)."""
    cover = {x: adj[x] & target for x in iter_bits(pool)}
    reach = 0
    for c in cover.values():
        reach |= c
    if reach & target != target:
        return None
    if not target:
        return 0
    if exact:
        cands = [x for x in sorted(cover) if cover[x]]
        for k in range(1, len(cands) + 1):
            for combo in combinations(cands, k):
                got = 0
                for x in combo:
                    got |= cover[x]
                if got == target:
                    return sum(1 << x for x in combo)
    chosen = 0
    left = target
    while left:
        best = max(cover, key=lambda x: (popcount(cover[x] & left), -x))
        chosen |= 1 << best
        left &= ~cover[best]
    for x in iter_bits(chosen):
        rest = chosen & ~(1 << x)
        got = 0
        for y in iter_bits(rest):
            got |= cover[y]
        if got == target:
            chosen = rest
    return chosen


def _private_neighbors(adj: tuple[int, ...], dom: int, target: int) -> dict[int, int]:
    out = {}
    for x in iter_bits(dom):
        others = 0
        for y in iter_bits(dom & ~(1 << x)):
            others |= adj[y]
        out[x] = lowest(adj[x] & target & ~others)
    return out


def _b_partition(adj: tuple[int, ...], order: list[int], B: int) -> list[int]:
    parts = []
    left = B
    for v in order:
        nb = 0
        for u in iter_bits(left):
            if adj[u] & adj[v]:
                nb |= 1 << u
        parts.append(nb)
        left &= ~nb
    return parts


def _build(g: Graph, packing: int, tiebreak: str, pool_mode: str, exact: bool) -> PackingDecomposition:
    adj = g.adj
    order = list(iter_bits(packing))
    closed_P = packing
    for v in order:
        closed_P |= adj[v]
    B = g.full_mask & ~closed_P

    def qualifies(v: int, b: int) -> bool:
        return popcount(adj[v]) >= 2 or b != 0

    # move qualifying packing vertices to the front; B parts of qualifying vertices only grow, so this settles
    for _ in range(len(order) + 1):
        parts = _b_partition(adj, order, B)
        flags = [qualifies(v, b) for v, b in zip(order, parts)]
        if flags == sorted(flags, reverse=True):
            break
        order = [v for v, f in zip(order, flags) if f] + [v for v, f in zip(order, flags) if not f]
    r = sum(flags)
    dec = PackingDecomposition(tuple(order), tiebreak, pool_mode, tuple(adj[v] for v in order), tuple(parts), r)

    if r == 0:
        A = 0
        for v in order:
            A |= adj[v]
        dec.S = A
        dec.blocks = []
        dec.failure = None
        dec.pool = "degenerate"
        return dec

    s_blocks = 0
    for i in range(r):
        v, Ai, Bi = order[i], adj[order[i]], parts[i]
        block = BlockCase(v, "", Ai, Bi)
        if Bi:
            D = _minimal_dominator(adj, Ai, Bi, exact)
            priv = _private_neighbors(adj, D, Bi)
            Dp = 0
            for x in priv.values():
                Dp |= 1 << x
            block.D, block.D_private, block.L = D, Dp, Bi & ~Dp
            local = Ai | Bi | 1 << v
            if D != Ai:
                w = lowest(Ai & ~D)
                block.case, block.w = "1.1", w
                block.S = local & ~Dp & ~(1 << w)
            else:
                block.case = "1.2"
                block.S = local & ~Dp
        else:
            w = lowest(Ai)
            block.case, block.w = "2", w
            block.S = (Ai | 1 << v) & ~(1 << w)
        dec.blocks.append(block)
        s_blocks |= block.S
    dec.S_blocks = s_blocks

    P_rest = 0
    A_rest = 0
    for v in order[r:]:
        P_rest |= 1 << v
        A_rest |= adj[v]
    dec.P_rest, dec.A_rest = P_rest, A_rest
    A_iso = 0
    for w in iter_bits(A_rest):
        if not adj[w] & (A_rest | s_blocks):
            A_iso |= 1 << w
    dec.A_isolated = A_iso

    A_all = 0
    for v in order:
        A_all |= adj[v]
    if pool_mode == "literal":
        pool = A_all & ~(A_rest | s_blocks)
    else:
        pool = g.full_mask & ~(s_blocks | A_rest | packing | P_rest)
    C = _minimal_dominator(adj, pool, A_iso, exact)
    if C is None:
        dec.failure = f"pool {sorted(from_mask(pool))} cannot dominate A'' {sorted(from_mask(A_iso))}"
        return dec
    priv = _private_neighbors(adj, C, A_iso)
    A3 = 0
    for x in priv.values():
        A3 |= 1 << x
    dec.C, dec.A_private = C, A3
    dec.S_rest = C | (A_rest & ~A3)
    dec.S = s_blocks | dec.S_rest
    return dec


def _bound(g: Graph) -> Fraction:
    d = max_degree(g)
    return Fraction(d * g.n, d + 1)


def _verdict(g: Graph, mask: int, bound: Fraction) -> str | None:
    if closure_mask(g.adj, mask) != g.full_mask:
        return "not forcing"
    if has_isolate_in(g.adj, mask):
        return "isolated vertex in G[S]"
    if popcount(mask) > bound:
        return "exceeds bound"
    return None


def choose_packing(g: Graph, tiebreak: str, exact_max_n: int) -> tuple[int, str]:
    if tiebreak not in TIEBREAKS:
        raise ValueError(f"unknown tiebreak {tiebreak!r}")
    if g.n > exact_max_n:
        return greedy_maximal_packing(g), "greedy maximal packing"
    packings = enumerate_maximum_packings(g)
    return min(packings, key=lambda m: packing_key(g, m, tiebreak)), f"maximum packing ({tiebreak})"


def packing_tf(
    g: Graph,
    *,
    packing_tiebreak: str = "paper_max_undominated",
    repair: bool = True,
    exact_packing_max_n: int = SUBSET_GUARD,
    exact_dominators: bool = False,
) -> ConstructionCertificate:
    """Certified TF-set of a connected graph (``n >= 3``) within ``Delta n / (Delta + 1)``.

    ``packing_tiebreak`` selects among maximum packings (see
    :func:`totalforcing.solvers.maximum_packing`); graphs larger than
    ``exact_packing_max_n`` use a greedy inclusion-maximal packing instead.

    If the literal construction fails verification and ``repair`` is on, the
    following are tried in order: the ``min_undominated`` tiebreak; a dominator
    ``C`` drawn from every vertex outside ``S' | A' | P``; finally, each
    isolated vertex of ``G[S]`` gets a neighbor added. With ``repair`` off a
    failure raises :class:`ConstructionError` carrying the decomposition.
    """
    if g.n < 3:
        raise PreconditionError("need at least 3 vertices")
    if not is_connected(g):
        raise PreconditionError("graph must be connected")
    bound = _bound(g)
    delta = max_degree(g)
    if delta <= 2:
        w = lowest(g.adj[0])
        return certify(g, 1 | 1 << w, bound, [f"max degree {delta}: adjacent pair 0,{w}"])

    attempts = [(packing_tiebreak, "literal")]
    if repair:
        attempts += [("min_undominated", "literal"), (packing_tiebreak, "widened"), ("min_undominated", "widened")]
    log: list[str] = []
    tried = []
    seen = set()
    for tiebreak, pool_mode in attempts:
        packing, how = choose_packing(g, tiebreak, exact_packing_max_n)
        if (packing, pool_mode) in seen:
            continue
        seen.add((packing, pool_mode))
        dec = _build(g, packing, tiebreak, pool_mode, exact_dominators)
        label = f"{how}, {pool_mode} pool"
        if dec.failure is None:
            dec.failure = _verdict(g, dec.S, bound)
        if dec.failure is None:
            log.append(f"{label}: " + _summary(dec))
            return certify(g, dec.S, bound, log, decomposition=dec)
        log.append(f"{label}: failed ({dec.failure})")
        tried.append(dec)
        if not repair:
            raise ConstructionError(f"construction failed: {dec.failure}", dec, log)

    for dec in tried:
        if not dec.S:
            continue
        patched = dec.S
        for v in iter_bits(dec.S):
            if not g.adj[v] & patched:
                patched |= 1 << lowest(g.adj[v])
        if _verdict(g, patched, bound) is None:
            log.append(f"isolate patch on {dec.tiebreak}/{dec.pool}: added {sorted(from_mask(patched & ~dec.S))}")
            return certify(g, patched, bound, log, decomposition=dec)
    raise ConstructionError("construction failed after all repairs", tried[-1] if tried else None, log)


def _summary(dec: PackingDecomposition) -> str:
    if dec.pool == "degenerate":
        return "all packing vertices are leaves with empty B: S = A"
    cases = ",".join(f"{b.vertex}:{b.case}" for b in dec.blocks)
    return f"r={dec.r} cases[{cases}] |C|={popcount(dec.C)}"
