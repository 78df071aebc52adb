"""Structural fusion module for fedges.

This module handles:
- Greedy heuristic common ordering of several DAGs
- Minimal I-map transformation of a DAG to a given order
- Union and consensus-threshold aggregation of transformed DAGs
"""

from fedges.fusion.fuse import (
    POLICY_FRACTIONS,
    FusionPolicy,
    FusionReport,
    fuse,
    threshold,
)
from fedges.fusion.imap import minimal_imap
from fedges.fusion.ordering import gho_order

__all__ = [
    # Policies
    "FusionPolicy",
    "POLICY_FRACTIONS",
    "threshold",
    # Fusion
    "gho_order",
    "minimal_imap",
    "fuse",
    "FusionReport",
]
