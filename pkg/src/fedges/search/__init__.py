"""Structure search module for fedges.

This module handles:
- GES Insert / Delete operators: validity, score deltas, application
- The edge-limited forward phase (FES) and the backward phase (BES)
- Full GES runs from an arbitrary starting DAG
"""

from fedges.search.ges import GesResult, TraceEntry, bes, fes, ges
from fedges.search.operators import (
    DeleteOp,
    InsertOp,
    apply_delete,
    apply_insert,
    delete_candidates,
    delta_delete,
    delta_insert,
    insert_candidates,
    na_yx,
    valid_delete,
    valid_insert,
)

__all__ = [
    # Operators
    "InsertOp",
    "DeleteOp",
    "na_yx",
    "valid_insert",
    "valid_delete",
    "delta_insert",
    "delta_delete",
    "apply_insert",
    "apply_delete",
    "insert_candidates",
    "delete_candidates",
    # Search
    "GesResult",
    "TraceEntry",
    "fes",
    "bes",
    "ges",
]
