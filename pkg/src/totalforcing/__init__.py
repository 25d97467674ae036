"""Total forcing sets in graphs: forcing engines, exact solvers, constructions, and a census harness."""

from __future__ import annotations

from .errors import (
    ConstructionError,
    Graph6Error,
    GuardError,
    InfeasibleError,
    PreconditionError,
    ProjectionError,
    TotalForcingError,
)
from .forcing import (
    ForcingChronology,
    PowerTrace,
    SetClass,
    classify_set,
    forcing_closure,
    is_forcing,
    is_power_dominating,
    is_total_forcing,
    power_closure,
)
from .gadget import GadgetMapping, build_gadget, lift_forcing_set, normalize_tf_set, project_tf_set
from .generators import all_connected_graphs, generate, random_connected_graph
from .graph import SUBSET_GUARD, Graph, VertexSet
from .graph6 import parse_graph6, read_graph6_file, write_graph6
from .solvers import SolveResult, all_min_tf_sets, maximum_packing, min_domination, min_forcing

__all__ = [
    "SUBSET_GUARD",
    "ConstructionError",
    "ForcingChronology",
    "GadgetMapping",
    "Graph",
    "Graph6Error",
    "GuardError",
    "InfeasibleError",
    "PowerTrace",
    "PreconditionError",
    "ProjectionError",
    "SetClass",
    "SolveResult",
    "TotalForcingError",
    "VertexSet",
    "all_connected_graphs",
    "all_min_tf_sets",
    "build_gadget",
    "classify_set",
    "forcing_closure",
    "generate",
    "is_forcing",
    "is_power_dominating",
    "is_total_forcing",
    "lift_forcing_set",
    "maximum_packing",
    "min_domination",
    "min_forcing",
    "normalize_tf_set",
    "parse_graph6",
    "power_closure",
    "project_tf_set",
    "random_connected_graph",
    "read_graph6_file",
    "write_graph6",
]
