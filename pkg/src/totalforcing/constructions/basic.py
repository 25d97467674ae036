"""TF-sets built from forcing sets, dominating sets, and power dominating sets,
plus the vertex-removal transformations."""

from __future__ import annotations

from typing import Iterable

from .._bits import closed_nbhd_mask, closure_mask, has_isolate_in, iter_bits, lowest, open_nbhd_mask, popcount, to_mask
from ..errors import PreconditionError
from ..forcing import forcing_closure, is_power_dominating
from ..graph import Graph, check_vertex_set, delete_vertex, is_isolate_free, max_degree, min_degree
from .certificate import ConstructionCertificate, certify


def _is_forcing(g: Graph, mask: int) -> bool:
    return g.n == 0 or (mask != 0 and closure_mask(g.adj, mask) == g.full_mask)


def _is_tf(g: Graph, mask: int) -> bool:
    return _is_forcing(g, mask) and not has_isolate_in(g.adj, mask)


def tf_doubling(g: Graph, f: Iterable[int]) -> ConstructionCertificate:
    """Give each member of forcing set ``f`` without a colored neighbor one neighbor (lowest id)."""
    fm = to_mask(check_vertex_set(g, f))
    if not is_isolate_free(g):
        raise PreconditionError("graph has an isolated vertex")
    if not _is_forcing(g, fm):
        raise PreconditionError("f is not a forcing set")
    w = fm
    log = []
    for v in iter_bits(fm):
        if not g.adj[v] & w:
            u = lowest(g.adj[v])
            w |= 1 << u
            log.append(f"partner {u} for {v}")
    if w == fm:
        log.append("already total")
    return certify(g, w, 2 * popcount(fm), log)


def _all_but_one_outside(g: Graph, d: int) -> tuple[int, list[str]]:
    w = d
    log = []
    for v in iter_bits(d):
        outside = g.adj[v] & ~d
        if outside:
            keep_out = 1 << (outside.bit_length() - 1)
            w |= outside & ~keep_out
            log.append(f"{v}: leave {keep_out.bit_length() - 1} for forcing")
    return w, log


def tf_from_dominating(g: Graph, d: Iterable[int]) -> ConstructionCertificate:
    """Dominating set plus, per member, all but its highest-id neighbor outside the set. Needs minimum degree 3."""
    dm = to_mask(check_vertex_set(g, d))
    if g.n == 0 or min_degree(g) < 3:
        raise PreconditionError("minimum degree must be at least 3")
    if closed_nbhd_mask(g.adj, dm) != g.full_mask:
        raise PreconditionError("d is not a dominating set")
    w, log = _all_but_one_outside(g, dm)
    return certify(g, w, popcount(dm) * max_degree(g), log)


def tf_from_total_dominating(g: Graph, d: Iterable[int]) -> ConstructionCertificate:
    """Same coloring rule applied to a total dominating set; bound ``|d| (Delta - 1)``."""
    dm = to_mask(check_vertex_set(g, d))
    if not is_isolate_free(g) or g.n == 0:
        raise PreconditionError("graph must be nonempty and isolate-free")
    if max_degree(g) < 2:
        raise PreconditionError("maximum degree must be at least 2")
    if open_nbhd_mask(g.adj, dm) != g.full_mask:
        raise PreconditionError("d is not a total dominating set")
    w, log = _all_but_one_outside(g, dm)
    return certify(g, w, popcount(dm) * (max_degree(g) - 1), log)


def tf_from_power_dominating(g: Graph, s: Iterable[int]) -> ConstructionCertificate:
    """Closed neighborhood of a power dominating set; bound ``|s| (Delta + 1)``."""
    sm = to_mask(check_vertex_set(g, s))
    if not is_isolate_free(g) or g.n == 0:
        raise PreconditionError("graph must be nonempty and isolate-free")
    if not is_power_dominating(g, iter_bits(sm)):
        raise PreconditionError("s is not a power dominating set")
    w = closed_nbhd_mask(g.adj, sm)
    return certify(g, w, popcount(sm) * (max_degree(g) + 1), ["closed neighborhood"])


def tf_add_vertex_back(g: Graph, t: Iterable[int], v: int) -> ConstructionCertificate:
    """Lift a TF-set ``t`` of ``g - v`` (given in ``g``'s ids) to ``g`` by adding ``v`` and its lowest neighbor."""
    ts = check_vertex_set(g, t)
    if not is_isolate_free(g):
        raise PreconditionError("graph has an isolated vertex")
    if v in ts:
        raise PreconditionError("t must not contain v")
    h, relabel = delete_vertex(g, v)
    if not _is_tf(h, to_mask(relabel[u] for u in ts)):
        raise PreconditionError("t is not a TF-set of g - v")
    w = lowest(g.adj[v])
    mask = to_mask(ts) | 1 << v | 1 << w
    return certify(g, mask, len(ts) + 2, [f"add {v} and neighbor {w}"])


def tf_delete_vertex(g: Graph, s: Iterable[int], v: int) -> ConstructionCertificate:
    """Turn a TF-set ``s`` of ``g`` into one of ``g - v``.

    The returned certificate is against ``g - v`` with compacted ids;
    ``relabel`` maps ``g``'s ids to the new ones.
    """
    sm = to_mask(check_vertex_set(g, s))
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} not in graph of order {g.n}")
    if not _is_tf(g, sm):
        raise PreconditionError("s is not a TF-set of g")
    h, relabel = delete_vertex(g, v)
    if h.n == 0 or not is_isolate_free(h):
        raise PreconditionError("g - v has an isolated vertex")
    adj = g.adj
    vbit = 1 << v
    nv = adj[v]
    log: list[str] = []

    def other_neighbor(u: int, avoid: int) -> int:
        return lowest(adj[u] & ~avoid)

    if popcount(nv) == 1:
        w = lowest(nv)
        bound = popcount(sm)
        if not sm & vbit:
            out = sm
            log.append("degree-1 v outside s: keep s")
        elif not adj[w] & ~sm:
            out = sm & ~vbit
            log.append("degree-1 v in s, N(w) inside s: drop v")
        else:
            x = lowest(adj[w] & ~sm)
            out = (sm & ~vbit) | 1 << x
            log.append(f"degree-1 v in s: replace v by {x}")
    else:
        bound = popcount(sm) + max_degree(g)
        chron = forcing_closure(g, iter_bits(sm))
        fired = [w for u, w in chron.steps if u == v]
        if not sm & vbit:
            if not fired:
                out = sm
                log.append("v outside s and never fires: keep s")
            else:
                w = fired[0]
                w2 = other_neighbor(w, vbit)
                out = sm | 1 << w | 1 << w2
                log.append(f"v outside s fires {w}: add {w} and {w2}")
        else:
            out = sm & ~vbit
            for u in iter_bits(nv & sm):
                u2 = other_neighbor(u, vbit)
                out |= 1 << u2
                log.append(f"substitute {u2} for {u}")
            if fired:
                v1 = fired[0]
                v2 = other_neighbor(v1, vbit)
                out |= 1 << v1 | 1 << v2
                log.append(f"v fires {v1}: add {v1} and {v2}")
            else:
                log.append("v in s and never fires")
    new_mask = to_mask(relabel[u] for u in iter_bits(out))
    return certify(h, new_mask, bound, log, relabel=relabel)
