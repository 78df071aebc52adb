"""Discrete Bayesian networks: conditional probability tables over a DAG."""

import logging
import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from fedges.graph.dag import Dag
from fedges.models import VariableSet

logger = logging.getLogger(__name__)

PROBABILITY_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class Cpt:
    """Conditional probability table P(child | parents).

    Attributes:
        child: Node index of the child.
        parents: Parent indices in ascending order.
        table: Array of shape (q, r): one row per parent configuration
            (row-major over parent categories, last parent fastest), one
            column per child category.
    """

    child: int
    parents: tuple[int, ...]
    table: npt.NDArray[np.float64]

    def __post_init__(self) -> None:
        if list(self.parents) != sorted(set(self.parents)):
            raise ValueError(f"CPT parents must be strictly ascending: {self.parents}")
        if self.child in self.parents:
            raise ValueError(f"CPT child {self.child} listed among its parents")
        if self.table.ndim != 2:
            raise ValueError("CPT table must be two-dimensional")
        if np.any(self.table < 0):
            raise ValueError(f"CPT for node {self.child} has negative entries")
        sums = self.table.sum(axis=1)
        if not np.all(np.abs(sums - 1.0) <= PROBABILITY_TOLERANCE):
            worst = float(np.max(np.abs(sums - 1.0)))
            raise ValueError(
                f"CPT rows for node {self.child} do not sum to 1 "
                f"(max error {worst:.3g})"
            )

    @property
    def rows(self) -> int:
        """Number of parent configurations (q)."""
        return int(self.table.shape[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cpt):
            return NotImplemented
        return (
            self.child == other.child
            and self.parents == other.parents
            and self.table.shape == other.table.shape
            and bool(np.allclose(self.table, other.table, rtol=0, atol=1e-12))
        )

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class BayesNet:
    """DAG plus one CPT per node.

    Attributes:
        dag: Network structure.
        cpts: CPTs in node-index order.
        name: Network name from the source document.
    """

    dag: Dag
    cpts: tuple[Cpt, ...]
    name: str = "network"

    def __post_init__(self) -> None:
        cards = self.dag.variables.cardinalities
        if len(self.cpts) != self.dag.n:
            raise ValueError(f"Expected {self.dag.n} CPTs, got {len(self.cpts)}")
        for node, cpt in enumerate(self.cpts):
            if cpt.child != node:
                raise ValueError(f"CPT at position {node} is for node {cpt.child}")
            if cpt.parents != tuple(sorted(self.dag.pa(node))):
                raise ValueError(f"CPT parents of node {node} differ from the DAG")
            q = math.prod(cards[p] for p in cpt.parents)
            if cpt.table.shape != (q, cards[node]):
                raise ValueError(
                    f"CPT for node {node} has shape {cpt.table.shape}, "
                    f"expected {(q, cards[node])}"
                )

    @property
    def variables(self) -> VariableSet:
        """Variables of the network."""
        return self.dag.variables

    @property
    def parameter_count(self) -> int:
        """Free parameters: sum over nodes of (r_i - 1) * q_i."""
        cards = self.variables.cardinalities
        return sum((cards[c.child] - 1) * c.rows for c in self.cpts)
