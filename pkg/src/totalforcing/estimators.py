"""scikit-learn style wrappers around the solvers and the packing construction.

Graphs go in through :func:`totalforcing.validation.check_graph`, so any
supported encoding works wherever a graph is expected.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._bits import to_mask
from .census.context import GraphContext
from .constructions import packing_tf
from .forcing import classify_mask
from .graph import SUBSET_GUARD, check_vertex_set
from .solvers import FORCING_VARIANTS, min_forcing
from .validation import check_graph, check_graphs

INVARIANTS = ("F", "F_t", "F_c", "gamma", "gamma_t", "gamma_c", "gamma_2", "gamma_P", "Delta", "delta", "n", "m")
_ATTR = {"F_t": "Ft", "F_c": "Fc"}


class TotalForcingSolver(BaseEstimator):
    """Exact minimum forcing set of one graph.

    ``fit(graph)`` stores ``value_`` and ``forcing_set_``; ``predict(sets)``
    tells whether each candidate set is a forcing set of the fitted variant.
    """

    def __init__(self, variant: str = "total", max_n: int = SUBSET_GUARD, override_guard: bool = False):
        self.variant = variant
        self.max_n = max_n
        self.override_guard = override_guard

    def fit(self, X, y=None):
        if self.variant not in FORCING_VARIANTS:
            raise ValueError(f"variant must be one of {FORCING_VARIANTS}, got {self.variant!r}")
        self.graph_ = check_graph(X)
        res = min_forcing(self.graph_, self.variant, max_n=self.max_n, override_guard=self.override_guard)
        self.value_ = res.value
        self.forcing_set_ = res.witness
        return self

    def predict(self, sets) -> np.ndarray:
        check_is_fitted(self, "graph_")
        g = self.graph_
        field = {"plain": 0, "total": 1, "connected": 2}[self.variant]
        return np.array([classify_mask(g.adj, g.n, to_mask(check_vertex_set(g, s)))[field] for s in sets], dtype=bool)


class GraphInvariantTransformer(TransformerMixin, BaseEstimator):
    """Map each graph to a row of exact invariants; undefined values become ``fill_value``."""

    def __init__(self, invariants=INVARIANTS, max_n: int = SUBSET_GUARD, fill_value: float = np.nan):
        self.invariants = invariants
        self.max_n = max_n
        self.fill_value = fill_value

    def fit(self, X=None, y=None):
        unknown = [i for i in self.invariants if i not in INVARIANTS]
        if unknown:
            raise ValueError(f"unknown invariants: {unknown}")
        self.n_features_out_ = len(self.invariants)
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "n_features_out_")
        rows = []
        for g in check_graphs(X):
            ctx = GraphContext(g, max_n=self.max_n)
            row = []
            for name in self.invariants:
                v = g.m if name == "m" else getattr(ctx, _ATTR.get(name, name))
                row.append(self.fill_value if v is None else v)
            rows.append(row)
        return np.array(rows, dtype=float).reshape(len(rows), len(self.invariants))

    def get_feature_names_out(self, input_features=None) -> np.ndarray:
        return np.array(self.invariants, dtype=object)


class PackingTotalForcing(BaseEstimator):
    """Certified TF-set from the packing construction; ``fit`` stores ``certificate_`` and ``tf_set_``."""

    def __init__(self, packing_tiebreak: str = "paper_max_undominated", repair: bool = True):
        self.packing_tiebreak = packing_tiebreak
        self.repair = repair

    def fit(self, X, y=None):
        g = check_graph(X)
        self.certificate_ = packing_tf(g, packing_tiebreak=self.packing_tiebreak, repair=self.repair)
        self.tf_set_ = self.certificate_.tf_set
        self.bound_ = self.certificate_.claimed_bound
        return self

    def transform(self, X=None) -> np.ndarray:
        """Indicator vector of the fitted TF-set."""
        check_is_fitted(self, "certificate_")
        out = np.zeros(self.certificate_.graph.n, dtype=bool)
        out[sorted(self.tf_set_)] = True
        return out
