"""Decomposable BDeu scoring with per-family memoization.

For a child X_i with r_i categories and q_i parent configurations, the
local score is::

    sum_j [ lnG(a_j) - lnG(a_j + N_ij) + sum_k ( lnG(a_jk + N_ijk) - lnG(a_jk) ) ]

with a_jk = ess / (r_i * q_i) and a_j = ess / q_i. Parent configurations
and cells with zero counts contribute exactly zero, so only observed ones
are summed.
"""

import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt
from scipy.special import gammaln

from fedges.config import DEFAULT_ESS
from fedges.exceptions import InvariantViolation
from fedges.graph.dag import Dag
from fedges.ingest.dataset import Dataset

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class LocalScoreKey:
    """Family identifier: a child and its ascending parent indices."""

    child: int
    parents: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.child in self.parents:
            raise ValueError(f"Child {self.child} cannot be its own parent")
        if any(a >= b for a, b in zip(self.parents, self.parents[1:], strict=False)):
            raise ValueError(f"Parents must be strictly ascending: {self.parents}")

    @classmethod
    def of(cls, child: int, parents: Iterable[int]) -> "LocalScoreKey":
        """Build a key from an unordered parent collection."""
        return cls(child, tuple(sorted(set(parents))))


@dataclass
class ScoreCache:
    """Memoized local BDeu scores for one client's dataset.

    Attributes:
        ess: Equivalent sample size, fixed for the cache's lifetime.
        hits: Lookups answered from the cache.
        misses: Lookups that computed a fresh score.
    """

    ess: float = DEFAULT_ESS
    hits: int = 0
    misses: int = 0
    _scores: dict[LocalScoreKey, float] = field(default_factory=dict, repr=False)
    _dataset_id: int | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if not self.ess > 0:
            raise ValueError(f"Equivalent sample size must be positive, got {self.ess}")

    def __len__(self) -> int:
        return len(self._scores)

    def _bind(self, dataset: Dataset) -> None:
        if self._dataset_id is None:
            self._dataset_id = id(dataset)
        elif self._dataset_id != id(dataset):
            raise InvariantViolation("A ScoreCache must not be shared across datasets")

    def lookup(self, dataset: Dataset, key: LocalScoreKey) -> float:
        """Return the local score of ``key``, computing it on a miss."""
        self._bind(dataset)
        cached = self._scores.get(key)
        if cached is not None:
            self.hits += 1
            return cached
        self.misses += 1
        score = _bdeu(dataset, key.child, key.parents, self.ess)
        self._scores[key] = score
        return score


def _configurations(
    dataset: Dataset, parents: tuple[int, ...]
) -> npt.NDArray[np.int64]:
    """Radix index of each row's parent configuration (last parent fastest)."""
    cards = dataset.variables.cardinalities
    config = np.zeros(dataset.m, dtype=np.int64)
    for parent in parents:
        config = config * cards[parent] + dataset.column(parent)
    return config


def family_counts(
    dataset: Dataset, child: int, parents: Iterable[int]
) -> npt.NDArray[np.int64]:
    """Contingency table N_ijk of a family.

    Args:
        dataset: Data to count.
        child: Child index.
        parents: Parent indices (sorted ascending internally).

    Returns:
        Integer array of shape (q_i, r_i); row j is the parent configuration
        in row-major order over ascending parents, last parent fastest.

    Raises:
        ValueError: If ``child`` is among ``parents``.
    """
    key = LocalScoreKey.of(child, parents)
    cards = dataset.variables.cardinalities
    r = cards[child]
    q = math.prod(cards[p] for p in key.parents)
    cells = _configurations(dataset, key.parents) * r + dataset.column(child)
    return np.bincount(cells, minlength=q * r).reshape(q, r).astype(np.int64)


def _bdeu(dataset: Dataset, child: int, parents: tuple[int, ...], ess: float) -> float:
    if dataset.m == 0:
        return 0.0
    cards = dataset.variables.cardinalities
    r = cards[child]
    q = math.prod(cards[p] for p in parents)
    a_j = ess / q
    a_jk = ess / (r * q)

    cells = _configurations(dataset, parents) * r + dataset.column(child)
    observed_cells, n_ijk = np.unique(cells, return_counts=True)
    _, config_of_cell = np.unique(observed_cells // r, return_inverse=True)
    n_ij = np.bincount(config_of_cell, weights=n_ijk)

    score = np.sum(gammaln(a_j) - gammaln(a_j + n_ij)) + np.sum(
        gammaln(a_jk + n_ijk) - gammaln(a_jk)
    )
    return float(score)


def local_bdeu(
    cache: ScoreCache, dataset: Dataset, child: int, parents: Iterable[int]
) -> float:
    """Memoized BDeu local score of ``child`` given ``parents``.

    Args:
        cache: Score cache bound to ``dataset``.
        dataset: Client data.
        child: Child index.
        parents: Parent indices in any order.

    Returns:
        Natural-log score; 0.0 for an empty dataset.

    Raises:
        ValueError: If ``child`` is among ``parents``.
    """
    return cache.lookup(dataset, LocalScoreKey.of(child, parents))


def total_score(cache: ScoreCache, dataset: Dataset, g: Dag) -> float:
    """Sum of local scores over all families of ``g``."""
    return sum(local_bdeu(cache, dataset, node, g.pa(node)) for node in range(g.n))
