"""Scoring module for fedges.

This module handles:
- Sufficient statistics (family contingency tables)
- BDeu local and total scores
- Per-client memoization of local scores
"""

from fedges.scoring.bdeu import (
    LocalScoreKey,
    ScoreCache,
    family_counts,
    local_bdeu,
    total_score,
)

__all__ = [
    "LocalScoreKey",
    "ScoreCache",
    "family_counts",
    "local_bdeu",
    "total_score",
]
