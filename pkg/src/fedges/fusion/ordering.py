"""Greedy heuristic common ordering for a set of DAGs."""

import logging
from collections.abc import Sequence

from fedges.graph.dag import Dag, Order

logger = logging.getLogger(__name__)


def gho_order(dags: Sequence[Dag]) -> Order:
    """Build a common variable order back to front.

    At each step the selected node is the one that is a sink (no remaining
    children) in the most input DAGs. Ties go to the fewest remaining
    children summed over the DAGs, then to the highest node index. The
    selected node takes the last free position and is removed from every
    DAG.

    Args:
        dags: One or more DAGs over the same variables.

    Returns:
        The common order.

    Raises:
        ValueError: If ``dags`` is empty or the DAGs use different variables.
    """
    if not dags:
        raise ValueError("gho_order needs at least one DAG")
    variables = dags[0].variables
    if any(g.variables != variables for g in dags[1:]):
        raise ValueError("All DAGs must share one VariableSet")

    n = len(variables)
    remaining_children = [[len(g.children(v)) for v in range(n)] for g in dags]
    remaining = set(range(n))
    reversed_order: list[int] = []

    while remaining:
        chosen = max(
            remaining,
            key=lambda v: (
                sum(1 for counts in remaining_children if counts[v] == 0),
                -sum(counts[v] for counts in remaining_children),
                v,
            ),
        )
        remaining.discard(chosen)
        reversed_order.append(chosen)
        for g, counts in zip(dags, remaining_children, strict=True):
            for parent in g.pa(chosen):
                counts[parent] -= 1

    order = Order.from_sequence(reversed_order[::-1])
    logger.debug(f"GHO order over {len(dags)} DAGs: {list(order)}")
    return order
