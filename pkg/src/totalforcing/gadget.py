"""Reduction from forcing to total forcing: hang a ``P_3`` off every vertex by its center."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ._bits import closure_mask, has_isolate_in, to_mask
from .errors import PreconditionError, ProjectionError
from .forcing import forcing_closure
from .graph import Graph, check_vertex_set


@dataclass(frozen=True)
class GadgetMapping:
    """Base graph, gadget, and the ``(center, leaf1, leaf2)`` triple attached to each base vertex.

    Base vertices keep their ids; the triple of base vertex ``i`` is
    ``(n + 3i, n + 3i + 1, n + 3i + 2)``.
    """

    base: Graph
    gadget: Graph
    triples: tuple[tuple[int, int, int], ...]

    @property
    def budget_shift(self) -> int:
        return 2 * self.base.n

    @property
    def centers(self) -> frozenset[int]:
        return frozenset(t[0] for t in self.triples)

    def to_text(self) -> str:
        """``base center leaf1 leaf2`` per line."""
        return "".join(f"{i} {c} {a} {b}\n" for i, (c, a, b) in enumerate(self.triples))


def build_gadget(g: Graph) -> GadgetMapping:
    n = g.n
    edges = list(g.edges())
    triples = []
    for i in range(n):
        c = n + 3 * i
        triples.append((c, c + 1, c + 2))
        edges += [(i, c), (c, c + 1), (c, c + 2)]
    return GadgetMapping(g, Graph(4 * n, edges), tuple(triples))


def lift_forcing_set(m: GadgetMapping, s: Iterable[int]) -> frozenset[int]:
    """Forcing set of the base to a TF-set of the gadget: add every center and its first leaf."""
    base = check_vertex_set(m.base, s)
    if m.base.n and closure_mask(m.base.adj, to_mask(base)) != m.base.full_mask:
        raise PreconditionError("s is not a forcing set of the base graph")
    out = set(base)
    for c, a, _ in m.triples:
        out.update((c, a))
    mask = to_mask(out)
    # the construction guarantees this; checked anyway so callers get a certified set
    assert closure_mask(m.gadget.adj, mask) == m.gadget.full_mask and not has_isolate_in(m.gadget.adj, mask)
    return frozenset(out)


def normalize_tf_set(m: GadgetMapping, s_prime: Iterable[int]) -> frozenset[int]:
    """Bring a gadget TF-set into the form projection expects, without growing it.

    A triple colored as center plus both leaves has a spare leaf: it is swapped
    for the base vertex (or just dropped if that is already present). A triple
    missing its center or both leaves is completed, so sets that are not minimum
    may grow here.
    """
    out = set(check_vertex_set(m.gadget, s_prime))
    for i, (c, a, b) in enumerate(m.triples):
        out.add(c)
        if a in out and b in out:
            out.discard(b)
            out.add(i)
        elif a not in out and b not in out:
            out.add(a)
    return frozenset(out)


def project_tf_set(m: GadgetMapping, s_prime: Iterable[int]) -> frozenset[int]:
    """Restrict a gadget TF-set to the base vertices and certify the result forces the base."""
    sp = check_vertex_set(m.gadget, s_prime)
    for c, a, b in m.triples:
        if c not in sp or (a not in sp and b not in sp):
            raise PreconditionError(f"triple {(c, a, b)} lacks its center or a leaf")
    base = frozenset(v for v in sp if v < m.base.n)
    chron = forcing_closure(m.base, base)
    if len(chron.final) != m.base.n:
        raise ProjectionError(f"projection {sorted(base)} does not force the base graph", chron)
    return base

