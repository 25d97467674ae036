"""Registry of named theorem checks.

Each check receives a :class:`GraphContext` and returns an :class:`Outcome`.
Graphs outside a check's hypotheses are reported as ``skip`` so sharpness and
coverage stay auditable. Known gaps in the stated results are reported as
discrepancies next to the outcome instead of as failures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .._bits import closed_nbhd_mask, closure_mask, power_fixpoint_mask
from ..constructions import (
    tf_add_vertex_back,
    tf_delete_vertex,
    tf_doubling,
    tf_from_dominating,
    tf_from_power_dominating,
    tf_from_total_dominating,
)
from ..errors import ConstructionError, ProjectionError
from ..gadget import build_gadget, lift_forcing_set, normalize_tf_set, project_tf_set
from ..graph import delete_vertex
from ..solvers import all_min_tf_sets, is_perfect_dominating_with_max_degree, min_forcing
from .context import GraphContext

PASS, FAIL, SKIP = "pass", "fail", "skip"

GADGET_MAX_N = 5
POWER_LEMMA_MAX_N = 14


@dataclass
class Outcome:
    status: str
    detail: str = ""
    discrepancies: list[tuple[str, str]] = field(default_factory=list)


@dataclass(frozen=True)
class Check:
    id: str
    description: str
    run: Callable[[GraphContext], Outcome]


REGISTRY: dict[str, Check] = {}


def register(check_id: str, description: str):
    def deco(fn: Callable[[GraphContext], Outcome]) -> Callable[[GraphContext], Outcome]:
        REGISTRY[check_id] = Check(check_id, description, fn)
        return fn

    return deco


def _verdict(ok: bool, detail: str) -> Outcome:
    return Outcome(PASS) if ok else Outcome(FAIL, detail)


def _skip(reason: str) -> Outcome:
    return Outcome(SKIP, reason)


@register("chain_forcing", "gamma_P <= F <= F_t <= F_c on connected non-paths")
def chain_forcing(c: GraphContext) -> Outcome:
    if not c.connected or c.is_path:
        return _skip("needs a connected graph that is not a path")
    vals = (c.gamma_P, c.F, c.Ft, c.Fc)
    return _verdict(vals[0] <= vals[1] <= vals[2] <= vals[3], f"gamma_P,F,F_t,F_c = {vals}")


@register("chain_domination", "gamma_P <= gamma <= gamma_t <= gamma_c on connected graphs with gamma_c >= 2")
def chain_domination(c: GraphContext) -> Outcome:
    if not c.connected or c.n < 3 or c.gamma_c < 2:
        return _skip("needs connected, n >= 3, gamma_c >= 2")
    vals = (c.gamma_P, c.gamma, c.gamma_t, c.gamma_c)
    return _verdict(vals[0] <= vals[1] <= vals[2] <= vals[3], f"gamma_P,gamma,gamma_t,gamma_c = {vals}")


@register("tf_ge_2", "F_t >= 2 on isolate-free graphs")
def tf_ge_2(c: GraphContext) -> Outcome:
    if not c.isolate_free:
        return _skip("has an isolated vertex")
    return _verdict(c.Ft >= 2, f"F_t = {c.Ft}")


@register("tf_le_2f", "F_t <= 2F on isolate-free graphs")
def tf_le_2f(c: GraphContext) -> Outcome:
    if not c.isolate_free:
        return _skip("has an isolated vertex")
    return _verdict(c.Ft <= 2 * c.F, f"F_t = {c.Ft}, F = {c.F}")


@register("tf_le_nminus1_connected", "F_t <= n - 1 on connected graphs of order >= 3")
def tf_le_nminus1_connected(c: GraphContext) -> Outcome:
    if c.connected and c.n >= 3:
        return _verdict(c.Ft <= c.n - 1, f"F_t = {c.Ft}, n = {c.n}")
    out = _skip("needs connected, n >= 3")
    if c.isolate_free and c.n >= 3 and c.Ft > c.n - 1:
        out.discrepancies.append(("nminus1_disconnected", f"isolate-free but disconnected with F_t = {c.Ft} = n"))
    return out


@register("extremal_nminus1", "F_t = n - 1 exactly on complete graphs and stars (connected, n >= 3)")
def extremal_nminus1(c: GraphContext) -> Outcome:
    if not c.connected or c.n < 3:
        return _skip("needs connected, n >= 3")
    hit = c.Ft == c.n - 1
    special = c.is_complete or c.is_star
    return _verdict(hit == special, f"F_t = {c.Ft}, n = {c.n}, complete/star = {special}")


@register("leaf_lemma", "every minimum TF-set holds each support of >= 2 leaves and all but one of its leaves")
def leaf_lemma(c: GraphContext) -> Outcome:
    if not c.isolate_free:
        return _skip("has an isolated vertex")
    adj = c.g.adj
    supports = {}
    for v, a in enumerate(adj):
        lv = [u for u in range(c.n) if a >> u & 1 and adj[u].bit_count() == 1]
        if len(lv) >= 2:
            supports[v] = lv
    if not supports:
        return _skip("no vertex with two leaf neighbors")
    witnesses = all_min_tf_sets(c.g, max_n=c.max_n, override_guard=c.override, cache=c.cache)
    for s in witnesses:
        for v, lv in supports.items():
            if v not in s or sum(u not in s for u in lv) > 1:
                return Outcome(FAIL, f"minimum TF-set {sorted(s)} breaks support {v}")
    out = Outcome(PASS)
    if witnesses.truncated:
        out.detail = "witness list truncated"
    return out


@register("gamma_delta", "F_t <= gamma * Delta when delta >= 3; equality forces a perfect dominating set of Delta-vertices")
def gamma_delta(c: GraphContext) -> Outcome:
    if c.n == 0 or c.delta < 3:
        return _skip("needs minimum degree >= 3")
    bound = c.gamma * c.Delta
    if c.Ft > bound:
        return Outcome(FAIL, f"F_t = {c.Ft} > gamma*Delta = {bound}")
    if c.Ft == bound and not is_perfect_dominating_with_max_degree(c.g):
        return Outcome(FAIL, f"F_t = gamma*Delta = {bound} without a perfect dominating set of Delta-vertices")
    return Outcome(PASS)


@register("gammat_delta", "F_t <= gamma_t * (Delta - 1) on isolate-free graphs with Delta >= 2")
def gammat_delta(c: GraphContext) -> Outcome:
    if not c.isolate_free or c.Delta < 2:
        return _skip("needs isolate-free and Delta >= 2")
    bound = c.gamma_t * (c.Delta - 1)
    return _verdict(c.Ft <= bound, f"F_t = {c.Ft} > gamma_t*(Delta-1) = {bound}")


@register("two_dom_sum", "F_t + gamma_2 <= n when delta >= 2")
def two_dom_sum(c: GraphContext) -> Outcome:
    if c.n == 0 or c.delta < 2:
        return _skip("needs minimum degree >= 2")
    return _verdict(c.Ft + c.gamma_2 <= c.n, f"F_t = {c.Ft}, gamma_2 = {c.gamma_2}, n = {c.n}")


@register("power_lemma", "S power dominates iff N[S] is a forcing set, for every S")
def power_lemma(c: GraphContext) -> Outcome:
    if c.n > POWER_LEMMA_MAX_N:
        return _skip(f"order above {POWER_LEMMA_MAX_N}")
    adj, full = c.g.adj, c.g.full_mask
    for s in range(1 << c.n):
        pd = power_fixpoint_mask(adj, s) == full
        nf = closure_mask(adj, closed_nbhd_mask(adj, s)) == full
        if pd != nf:
            return Outcome(FAIL, f"set mask {s:#x}: power dominating = {pd}, N[S] forcing = {nf}")
    return Outcome(PASS)


@register("power_upper", "F_t <= gamma_P * (Delta + 1) on isolate-free graphs")
def power_upper(c: GraphContext) -> Outcome:
    if not c.isolate_free:
        return _skip("has an isolated vertex")
    bound = c.gamma_P * (c.Delta + 1)
    return _verdict(c.Ft <= bound, f"F_t = {c.Ft} > gamma_P*(Delta+1) = {bound}")


@register("power_lower", "F_t >= 2 gamma_P on isolate-free graphs")
def power_lower(c: GraphContext) -> Outcome:
    if not c.isolate_free:
        return _skip("has an isolated vertex")
    return _verdict(c.Ft >= 2 * c.gamma_P, f"F_t = {c.Ft}, gamma_P = {c.gamma_P}")


@register("vertex_removal", "F_t - 2 <= F_t(G - v) <= F_t + Delta for every v leaving G - v isolate-free")
def vertex_removal(c: GraphContext) -> Outcome:
    if not c.isolate_free:
        return _skip("has an isolated vertex")
    vs = c.admissible_removals()
    if not vs:
        return _skip("no admissible vertex")
    for v in vs:
        sub = c.subgraph_tf(v)
        if not c.Ft - 2 <= sub <= c.Ft + c.Delta:
            return Outcome(FAIL, f"v = {v}: F_t = {c.Ft}, F_t(G-v) = {sub}, Delta = {c.Delta}")
    return Outcome(PASS)


@register("leaf_removal", "F_t(G - v) <= F_t for every leaf v of a connected graph of order >= 3")
def leaf_removal(c: GraphContext) -> Outcome:
    if not c.connected or c.n < 3:
        return _skip("needs connected, n >= 3")
    leaves = [v for v, d in enumerate(c.degrees) if d == 1]
    if not leaves:
        return _skip("no leaf")
    for v in leaves:
        sub = c.subgraph_tf(v)
        if sub is None or sub > c.Ft:
            return Outcome(FAIL, f"leaf {v}: F_t = {c.Ft}, F_t(G-v) = {sub}")
    return Outcome(PASS)


def upper_bound(c: GraphContext) -> Fraction:
    return Fraction(c.Delta * c.n, c.Delta + 1)


@register("upper_main", "F_t <= Delta n / (Delta + 1) on connected graphs of order >= 3")
def upper_main(c: GraphContext) -> Outcome:
    if not c.connected or c.n < 3:
        return _skip("needs connected, n >= 3")
    b = upper_bound(c)
    return _verdict(c.Ft <= b, f"F_t = {c.Ft} > {b}")


@register("upper_main_equality", "F_t = Delta n / (Delta + 1) exactly on K_{Delta+1} and stars")
def upper_main_equality(c: GraphContext) -> Outcome:
    if not c.connected or c.n < 3:
        return _skip("needs connected, n >= 3")
    hit = c.Ft == upper_bound(c)
    special = c.is_complete or c.is_star
    return _verdict(hit == special, f"F_t = {c.Ft}, bound = {upper_bound(c)}, complete/star = {special}")


def _construction_runs(c: GraphContext):
    """Yield ``(label, thunk)`` for every construction whose preconditions ``c.g`` meets."""
    g = c.g
    if not c.isolate_free:
        return
    yield "doubling", lambda: tf_doubling(g, c.F_res.witness)
    if c.delta >= 3:
        yield "dominating", lambda: tf_from_dominating(g, c.gamma_res.witness)
    if c.Delta >= 2:
        yield "total_dominating", lambda: tf_from_total_dominating(g, c.gamma_t_res.witness)
    yield "power_dominating", lambda: tf_from_power_dominating(g, c.gamma_P_res.witness)
    for v in c.admissible_removals():
        h, relabel = delete_vertex(g, v)
        back = {new: old for old, new in relabel.items()}
        t = c.subgraph_tf_res(v).witness
        yield f"add_vertex_back[{v}]", lambda v=v, t=t, back=back: tf_add_vertex_back(g, {back[x] for x in t}, v)
        yield f"delete_vertex[{v}]", lambda v=v: tf_delete_vertex(g, c.Ft_res.witness, v)


@register("construction_validity", "every construction yields a certified TF-set within its bound")
def construction_validity(c: GraphContext) -> Outcome:
    runs = list(_construction_runs(c))
    out = Outcome(PASS)
    lit = c.packing_literal
    if lit is not None:
        if isinstance(lit, ConstructionError):
            out.discrepancies.append(("packing_literal_residue", str(lit)))
            rep = c.packing_repaired
            if isinstance(rep, ConstructionError):
                return Outcome(FAIL, f"packing_tf after repair: {rep}", out.discrepancies)
    elif not runs:
        return _skip("no construction applies")
    for label, thunk in runs:
        try:
            cert = thunk()
        except ConstructionError as exc:
            return Outcome(FAIL, f"{label}: {exc}", out.discrepancies)
        if not cert.within_bound():
            return Outcome(FAIL, f"{label}: size {cert.size} above {cert.claimed_bound}", out.discrepancies)
    return out


@register("gadget_budget", "F_t(gadget) = F + 2n, and lift/project round-trips on minimum witnesses (n <= 5)")
def gadget_budget(c: GraphContext) -> Outcome:
    if c.n > GADGET_MAX_N or c.n == 0:
        return _skip(f"order outside 1..{GADGET_MAX_N}")
    m = build_gadget(c.g)
    res = min_forcing(m.gadget, "total", max_n=max(c.max_n, 4 * c.n), override_guard=c.override)
    if res.value != c.F + 2 * c.n:
        return Outcome(FAIL, f"F_t(gadget) = {res.value}, F + 2n = {c.F + 2 * c.n}")
    f = c.F_res.witness
    try:
        lifted = lift_forcing_set(m, f)
        if len(lifted) != res.value or project_tf_set(m, lifted) != f:
            return Outcome(FAIL, f"lift/project of {sorted(f)} is not the identity")
        back = project_tf_set(m, normalize_tf_set(m, res.witness))
    except ProjectionError as exc:
        return Outcome(FAIL, str(exc))
    return _verdict(len(back) == c.F, f"projected witness {sorted(back)} has size {len(back)} != F = {c.F}")


@register("obs4_formulas", "F_t = 2 on paths and cycles, n - 1 on complete graphs (n >= 3)")
def obs4_formulas(c: GraphContext) -> Outcome:
    if c.n < 3:
        return _skip("n < 3")
    if c.is_complete:
        return _verdict(c.Ft == c.n - 1, f"complete: F_t = {c.Ft}")
    if c.is_path or c.is_cycle:
        return _verdict(c.Ft == 2, f"path/cycle: F_t = {c.Ft}")
    return _skip("not a path, cycle or complete graph")


@register("ore_bound", "gamma <= n / 2 on isolate-free graphs")
def ore_bound(c: GraphContext) -> Outcome:
    if not c.isolate_free:
        return _skip("has an isolated vertex")
    return _verdict(2 * c.gamma <= c.n, f"gamma = {c.gamma}, n = {c.n}")


@register("aim_lower", "F >= minimum degree")
def aim_lower(c: GraphContext) -> Outcome:
    return _verdict(c.F >= c.delta, f"F = {c.F}, delta = {c.delta}")


CHECK_IDS = tuple(REGISTRY)
