"""Constructive TF-sets, each returned as a certificate verified by the forcing engine."""

from __future__ import annotations

from .basic import (
    tf_add_vertex_back,
    tf_delete_vertex,
    tf_doubling,
    tf_from_dominating,
    tf_from_power_dominating,
    tf_from_total_dominating,
)
from .certificate import ConstructionCertificate, certify
from .packing import PackingDecomposition, choose_packing, packing_tf

__all__ = [
    "ConstructionCertificate",
    "PackingDecomposition",
    "certify",
    "choose_packing",
    "packing_tf",
    "tf_add_vertex_back",
    "tf_delete_vertex",
    "tf_doubling",
    "tf_from_dominating",
    "tf_from_power_dominating",
    "tf_from_total_dominating",
]
