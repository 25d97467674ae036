"""Input coercion for the estimator layer: turn common graph encodings into :class:`Graph`."""

from __future__ import annotations

from typing import Any

import numpy as np

from .graph import Graph
from .graph6 import parse_graph6


def check_graph(obj: Any) -> Graph:
    """Coerce ``obj`` to a :class:`Graph`.

    Accepted: a ``Graph``; a graph6 string (or bytes); an object with
    ``nodes`` and ``edges`` such as a networkx graph, whose nodes are relabelled
    ``0..n-1`` in sorted order; a square symmetric 0/1 adjacency matrix; or a
    ``(n, edges)`` pair.
    """
    if isinstance(obj, Graph):
        return obj
    if isinstance(obj, bytes):
        obj = obj.decode("ascii")
    if isinstance(obj, str):
        return parse_graph6(obj.strip())
    if hasattr(obj, "nodes") and hasattr(obj, "edges"):
        nodes = sorted(obj.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return Graph(len(nodes), [(index[u], index[v]) for u, v in obj.edges()])
    if isinstance(obj, tuple) and len(obj) == 2 and isinstance(obj[0], int):
        return Graph(obj[0], [tuple(e) for e in obj[1]])
    arr = np.asarray(obj)
    if arr.ndim == 2 and arr.shape[0] == arr.shape[1]:
        if not np.array_equal(arr, arr.T):
            raise ValueError("adjacency matrix must be symmetric")
        if np.any(np.diag(arr)):
            raise ValueError("adjacency matrix must have a zero diagonal")
        if not np.isin(arr, (0, 1)).all():
            raise ValueError("adjacency matrix entries must be 0 or 1")
        us, vs = np.nonzero(np.triu(arr, 1))
        return Graph(arr.shape[0], zip(us.tolist(), vs.tolist()))
    raise TypeError(f"cannot interpret {type(obj).__name__} as a graph")


def check_graphs(X: Any) -> list[Graph]:
    """Coerce a single graph or an iterable of graphs to a list of :class:`Graph`."""
    single = isinstance(X, (Graph, str, bytes, tuple)) or (hasattr(X, "nodes") and hasattr(X, "edges"))
    if single or (isinstance(X, np.ndarray) and X.ndim == 2):
        return [check_graph(X)]
    return [check_graph(x) for x in X]
