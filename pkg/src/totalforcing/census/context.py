"""Per-graph lazily computed invariants shared by all checks."""

from __future__ import annotations

from functools import cached_property

from ..constructions import packing_tf
from ..errors import ConstructionError
from ..graph import Graph, delete_vertex, is_complete, is_connected, is_cycle, is_path, is_star
from ..graph6 import write_graph6
from ..solvers import ForcingCache, SolveResult, min_domination, min_forcing

INVARIANT_COLUMNS = (
    "graph6", "n", "m", "Delta", "delta",
    "F", "F_t", "F_c", "gamma", "gamma_t", "gamma_c", "gamma_2", "gamma_P",
    "packing_tf", "packing_tf_literal",
)


class GraphContext:
    """One graph plus memoised exact invariants (``None`` where a parameter is undefined)."""

    def __init__(
        self,
        g: Graph,
        *,
        max_n: int,
        override_guard: bool = False,
        tiebreak: str = "paper_max_undominated",
        repair: bool = True,
    ):
        self.g = g
        self.max_n = max_n
        self.override = override_guard
        self.tiebreak = tiebreak
        self.repair = repair
        self.cache = ForcingCache(g)
        self._subgraph_tf: dict[int, SolveResult | None] = {}

    @cached_property
    def graph6(self) -> str:
        return write_graph6(self.g)

    @property
    def n(self) -> int:
        return self.g.n

    @cached_property
    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.g.adj]

    @cached_property
    def Delta(self) -> int:
        return max(self.degrees, default=0)

    @cached_property
    def delta(self) -> int:
        return min(self.degrees, default=0)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.g)

    @cached_property
    def isolate_free(self) -> bool:
        return self.n > 0 and self.delta > 0

    @cached_property
    def is_path(self) -> bool:
        return is_path(self.g)

    @cached_property
    def is_cycle(self) -> bool:
        return is_cycle(self.g)

    @cached_property
    def is_complete(self) -> bool:
        return is_complete(self.g)

    @cached_property
    def is_star(self) -> bool:
        return is_star(self.g)

    def _forcing(self, variant: str) -> SolveResult:
        return min_forcing(self.g, variant, max_n=self.max_n, override_guard=self.override, cache=self.cache)

    def _dom(self, variant: str) -> SolveResult:
        return min_domination(self.g, variant, max_n=self.max_n, override_guard=self.override)

    @cached_property
    def F_res(self) -> SolveResult:
        return self._forcing("plain")

    @cached_property
    def Ft_res(self) -> SolveResult | None:
        return self._forcing("total") if self.isolate_free else None

    @cached_property
    def Fc_res(self) -> SolveResult | None:
        return self._forcing("connected") if self.connected else None

    @cached_property
    def gamma_res(self) -> SolveResult:
        return self._dom("plain")

    @cached_property
    def gamma_t_res(self) -> SolveResult | None:
        return self._dom("total") if self.isolate_free else None

    @cached_property
    def gamma_c_res(self) -> SolveResult | None:
        return self._dom("connected") if self.connected else None

    @cached_property
    def gamma_2_res(self) -> SolveResult:
        return self._dom("two_step")

    @cached_property
    def gamma_P_res(self) -> SolveResult:
        return self._dom("power")

    @property
    def F(self) -> int:
        return self.F_res.value

    @property
    def Ft(self) -> int | None:
        return None if self.Ft_res is None else self.Ft_res.value

    @property
    def Fc(self) -> int | None:
        return None if self.Fc_res is None else self.Fc_res.value

    @property
    def gamma(self) -> int:
        return self.gamma_res.value

    @property
    def gamma_t(self) -> int | None:
        return None if self.gamma_t_res is None else self.gamma_t_res.value

    @property
    def gamma_c(self) -> int | None:
        return None if self.gamma_c_res is None else self.gamma_c_res.value

    @property
    def gamma_2(self) -> int:
        return self.gamma_2_res.value

    @property
    def gamma_P(self) -> int:
        return self.gamma_P_res.value

    def subgraph_tf_res(self, v: int) -> SolveResult | None:
        """Minimum TF-set of ``G - v`` (compacted ids), or ``None`` when ``G - v`` is empty or has an isolate."""
        if v not in self._subgraph_tf:
            h, _ = delete_vertex(self.g, v)
            ok = h.n > 0 and all(h.adj)
            self._subgraph_tf[v] = (
                min_forcing(h, "total", max_n=self.max_n, override_guard=self.override) if ok else None
            )
        return self._subgraph_tf[v]

    def subgraph_tf(self, v: int) -> int | None:
        res = self.subgraph_tf_res(v)
        return None if res is None else res.value

    def admissible_removals(self) -> list[int]:
        """Vertices whose deletion leaves a nonempty isolate-free graph."""
        return [v for v in range(self.n) if self.subgraph_tf(v) is not None]

    @cached_property
    def packing_literal(self):
        """Literal packing construction: certificate, or the ``ConstructionError`` it raised."""
        if not (self.connected and self.n >= 3):
            return None
        try:
            return packing_tf(self.g, packing_tiebreak=self.tiebreak, repair=False, exact_packing_max_n=self.max_n)
        except ConstructionError as exc:
            return exc

    @cached_property
    def packing_repaired(self):
        if not (self.connected and self.n >= 3):
            return None
        lit = self.packing_literal
        if not isinstance(lit, ConstructionError):
            return lit
        if not self.repair:
            return None
        try:
            return packing_tf(self.g, packing_tiebreak=self.tiebreak, repair=True, exact_packing_max_n=self.max_n)
        except ConstructionError as exc:
            return exc


def _size(cert) -> int | None:
    return None if cert is None or isinstance(cert, Exception) else cert.size


def compute_invariants(ctx: GraphContext | Graph, **options) -> dict:
    """One row of exact invariants and construction sizes; undefined entries are ``None``."""
    if isinstance(ctx, Graph):
        options.setdefault("max_n", 30)
        ctx = GraphContext(ctx, **options)
    return {
        "graph6": ctx.graph6,
        "n": ctx.n,
        "m": ctx.g.m,
        "Delta": ctx.Delta,
        "delta": ctx.delta,
        "F": ctx.F,
        "F_t": ctx.Ft,
        "F_c": ctx.Fc,
        "gamma": ctx.gamma,
        "gamma_t": ctx.gamma_t,
        "gamma_c": ctx.gamma_c,
        "gamma_2": ctx.gamma_2,
        "gamma_P": ctx.gamma_P,
        "packing_tf": _size(ctx.packing_repaired),
        "packing_tf_literal": _size(ctx.packing_literal),
    }
