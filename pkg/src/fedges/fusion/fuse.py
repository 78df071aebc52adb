"""Union and consensus-threshold fusion of DAG structures.

Fusion only ever sees Dag values. Inputs are transformed to a common
order, then each directed edge is kept when enough transformed inputs
contain it.
"""

import logging
import math
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from decimal import Decimal

from fedges.fusion.imap import minimal_imap
from fedges.fusion.ordering import gho_order
from fedges.graph.dag import Dag, Edge, Order
from fedges.models import FusionKind

logger = logging.getLogger(__name__)

# Named policies for the experiment grid
POLICY_FRACTIONS = {
    "union": None,
    "c25": Decimal("0.25"),
    "c50": Decimal("0.50"),
}


@dataclass(frozen=True)
class FusionPolicy:
    """Edge aggregation rule.

    Attributes:
        kind: Union or consensus.
        fraction: Share of inputs an edge needs under consensus, in (0, 1].
    """

    kind: FusionKind
    fraction: Decimal = Decimal("1")

    def __post_init__(self) -> None:
        if not Decimal("0") < self.fraction <= Decimal("1"):
            raise ValueError(f"Fusion fraction must be in (0, 1], got {self.fraction}")

    @classmethod
    def union(cls) -> "FusionPolicy":
        """Keep every edge present in any input."""
        return cls(FusionKind.UNION)

    @classmethod
    def consensus(cls, fraction: Decimal | float | str) -> "FusionPolicy":
        """Keep edges present in at least ``fraction`` of the inputs."""
        return cls(FusionKind.CONSENSUS, Decimal(str(fraction)))

    @classmethod
    def from_name(cls, name: str) -> "FusionPolicy":
        """Resolve ``union``, ``c25`` or ``c50``.

        Raises:
            ValueError: If the name is not known.
        """
        key = name.strip().lower()
        if key not in POLICY_FRACTIONS:
            raise ValueError(
                f"Unknown fusion policy {name!r}; expected one of "
                f"{sorted(POLICY_FRACTIONS)}"
            )
        fraction = POLICY_FRACTIONS[key]
        return cls.union() if fraction is None else cls.consensus(fraction)

    @property
    def name(self) -> str:
        """Short name used in reports (``union``, ``c25``, ``c50``, ...)."""
        if self.kind is FusionKind.UNION:
            return "union"
        return f"c{int(self.fraction * 100)}"


def threshold(policy: FusionPolicy, k: int) -> int:
    """Minimum edge support for ``k`` inputs.

    Union needs 1; consensus needs ``max(1, floor(k * fraction))``.

    Raises:
        ValueError: If ``k < 1``.
    """
    if k < 1:
        raise ValueError(f"Input count must be at least 1, got {k}")
    if policy.kind is FusionKind.UNION:
        return 1
    return max(1, math.floor(policy.fraction * k))


@dataclass(frozen=True)
class FusionReport:
    """Details of one fusion.

    Attributes:
        order: Common order the inputs were transformed to.
        transformed_edge_counts: Edge count of each transformed input.
        support: Number of transformed inputs containing each edge.
        threshold: Minimum support an edge needed.
        dag: Fused DAG.
    """

    order: Order
    transformed_edge_counts: tuple[int, ...]
    support: dict[Edge, int]
    threshold: int
    dag: Dag


def fuse(
    dags: Sequence[Dag], policy: FusionPolicy, order: Order | None = None
) -> tuple[Dag, FusionReport]:
    """Fuse DAG structures.

    Args:
        dags: One or more DAGs over the same variables.
        policy: Aggregation rule.
        order: Common order to use; computed with ``gho_order`` when None.

    Returns:
        Tuple of (fused DAG, FusionReport).

    Raises:
        ValueError: If ``dags`` is empty or the variables differ.
    """
    if not dags:
        raise ValueError("fuse needs at least one DAG")
    sigma = order if order is not None else gho_order(dags)
    variables = dags[0].variables
    if any(g.variables != variables for g in dags[1:]):
        raise ValueError("All DAGs must share one VariableSet")

    transformed = [minimal_imap(g, sigma) for g in dags]
    support: Counter[Edge] = Counter()
    for g in transformed:
        support.update(g.edges())

    needed = threshold(policy, len(dags))
    kept = sorted(edge for edge, count in support.items() if count >= needed)
    fused = Dag.from_edges(variables, kept)

    logger.debug(
        f"Fused {len(dags)} DAGs ({policy.name}, threshold {needed}): "
        f"{len(support)} candidate edges, {fused.edge_count} kept"
    )
    report = FusionReport(
        order=sigma,
        transformed_edge_counts=tuple(g.edge_count for g in transformed),
        support=dict(sorted(support.items())),
        threshold=needed,
        dag=fused,
    )
    return fused, report
