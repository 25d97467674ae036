from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .._bits import from_mask, has_isolate_in, popcount
from ..errors import ConstructionError
from ..forcing import ForcingChronology, forcing_closure
from ..graph import Graph


@dataclass(frozen=True)
class ConstructionCertificate:
    """A total forcing set built by a construction, verified by the forcing engine.

    ``graph`` is the graph the set was certified against (for vertex deletion
    this is ``g - v`` with compacted ids, and ``relabel`` maps old ids to new).
    """

    tf_set: frozenset[int]
    claimed_bound: Fraction
    chronology: ForcingChronology
    case_log: tuple[str, ...]
    graph: Graph
    relabel: dict[int, int] | None = None
    decomposition: Any = field(default=None, compare=False)

    @property
    def size(self) -> int:
        return len(self.tf_set)

    def within_bound(self) -> bool:
        return self.size <= self.claimed_bound

    def to_record(self) -> dict:
        return {
            "tf_set": sorted(self.tf_set),
            "size": self.size,
            "claimed_bound": str(self.claimed_bound),
            "case_log": list(self.case_log),
        }


def certify(
    g: Graph,
    mask: int,
    bound,
    case_log,
    *,
    relabel: dict[int, int] | None = None,
    decomposition=None,
) -> ConstructionCertificate:
    """Verify ``mask`` is a TF-set of ``g`` within ``bound`` and wrap it in a certificate."""
    log = tuple(case_log)
    chron = forcing_closure(g, from_mask(mask))
    if len(chron.final) != g.n:
        raise ConstructionError(
            f"constructed set {sorted(from_mask(mask))} is not forcing", decomposition, log
        )
    if g.n and (not mask or has_isolate_in(g.adj, mask)):
        raise ConstructionError(
            f"constructed set {sorted(from_mask(mask))} induces an isolated vertex", decomposition, log
        )
    bound = Fraction(bound)
    if popcount(mask) > bound:
        raise ConstructionError(f"constructed set of size {popcount(mask)} exceeds bound {bound}", decomposition, log)
    return ConstructionCertificate(from_mask(mask), bound, chron, log, g, relabel, decomposition)
