"""Metrics module for fedges.

This module handles:
- Structural moralized Hamming distance between DAGs
- Evaluation of learned DAGs against ground-truth networks
- Size summaries of benchmark networks
"""

from fedges.metrics.smhd import (
    EvalResult,
    NetworkSummary,
    evaluate,
    network_summary,
    smhd,
)

__all__ = [
    "EvalResult",
    "NetworkSummary",
    "smhd",
    "evaluate",
    "network_summary",
]
