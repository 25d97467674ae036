"""Forcing propagation with chronologies, set classification, and power-domination monitoring."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from ._bits import closed_nbhd_mask, closure_mask, from_mask, has_isolate_in, is_connected_in, iter_bits, to_mask
from .graph import Graph, check_vertex_set


@dataclass(frozen=True)
class ForcingChronology:
    """One witnessed run of the forcing process.

    ``steps`` lists ``(forcer, forced)`` pairs in firing order; ``final`` is the
    closure of ``initial``.
    """

    initial: frozenset[int]
    final: frozenset[int]
    steps: tuple[tuple[int, int], ...]

    def to_text(self) -> str:
        """One ``forcer->forced`` line per step."""
        return "".join(f"{u}->{w}\n" for u, w in self.steps)

    @staticmethod
    def parse_steps(text: str) -> tuple[tuple[int, int], ...]:
        steps = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            u, sep, w = line.partition("->")
            if not sep:
                raise ValueError(f"bad chronology line {line!r}")
            steps.append((int(u), int(w)))
        return tuple(steps)

    def replay(self, g: Graph) -> frozenset[int]:
        """Re-apply the steps against the forcing rule, raising if any step is illegal."""
        colored = to_mask(self.initial)
        for u, w in self.steps:
            if not colored >> u & 1:
                raise ValueError(f"forcer {u} is not colored")
            un = g.adj[u] & ~colored
            if un != 1 << w:
                raise ValueError(f"{w} is not the unique uncolored neighbor of {u}")
            colored |= un
        return from_mask(colored)


def forcing_closure(g: Graph, s: Iterable[int], rng: random.Random | None = None) -> ForcingChronology:
    """Run the forcing process from ``s``.

    By default the lowest-id eligible forcer fires first, so chronologies are
    reproducible. Passing ``rng`` picks a uniformly random eligible forcer at
    each step instead; the final set does not depend on the choice.
    """
    init = check_vertex_set(g, s)
    colored = to_mask(init)
    adj = g.adj
    steps = []
    while True:
        eligible = []
        for v in iter_bits(colored):
            un = adj[v] & ~colored
            if un and not un & (un - 1):
                eligible.append((v, un))
                if rng is None:
                    break
        if not eligible:
            break
        v, un = eligible[0] if rng is None else rng.choice(eligible)
        colored |= un
        steps.append((v, un.bit_length() - 1))
    return ForcingChronology(init, from_mask(colored), tuple(steps))


class SetClass(NamedTuple):
    forcing: bool
    total_forcing: bool
    connected_forcing: bool


def classify_mask(adj: tuple[int, ...], n: int, mask: int) -> SetClass:
    if n == 0:
        return SetClass(True, True, True)
    if not mask:
        return SetClass(False, False, False)
    forcing = closure_mask(adj, mask) == (1 << n) - 1
    return SetClass(
        forcing,
        forcing and not has_isolate_in(adj, mask),
        forcing and is_connected_in(adj, mask),
    )


def classify_set(g: Graph, s: Iterable[int]) -> SetClass:
    """Whether ``s`` is a forcing, total forcing, and connected forcing set of ``g``.

    The empty set is non-forcing on a nonempty graph; on the empty graph every
    flag holds vacuously.
    """
    return classify_mask(g.adj, g.n, to_mask(check_vertex_set(g, s)))


def is_forcing(g: Graph, s: Iterable[int]) -> bool:
    return classify_set(g, s).forcing


def is_total_forcing(g: Graph, s: Iterable[int]) -> bool:
    return classify_set(g, s).total_forcing


@dataclass(frozen=True)
class PowerTrace:
    """Monitored sets layer by layer; ``layers[0]`` is the closed neighborhood of the seed."""

    layers: tuple[frozenset[int], ...]
    fixpoint: frozenset[int]


def power_closure(g: Graph, s: Iterable[int]) -> PowerTrace:
    """Iterate the monitoring rule: a monitored vertex with at most one unmonitored
    closed neighbor monitors its whole closed neighborhood, all at once per layer."""
    adj = g.adj
    layer = closed_nbhd_mask(adj, to_mask(check_vertex_set(g, s)))
    layers = [layer]
    while True:
        nxt = 0
        for v in iter_bits(layer):
            closed = adj[v] | 1 << v
            out = closed & ~layer
            if not out & (out - 1):
                nxt |= closed
        if nxt == layer:
            break
        layer = nxt
        layers.append(layer)
    frozen = tuple(from_mask(x) for x in layers)
    return PowerTrace(frozen, frozen[-1])


def is_power_dominating(g: Graph, s: Iterable[int]) -> bool:
    return power_closure(g, s).fixpoint == frozenset(range(g.n))
