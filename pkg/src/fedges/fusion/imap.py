"""Minimal directed I-map of a DAG under a fixed variable order."""

from fedges.graph.dag import Dag, Order
from fedges.graph.dsep import d_separated


def minimal_imap(g: Dag, sigma: Order) -> Dag:
    """Transform ``g`` into the minimal I-map compatible with ``sigma``.

    The parents of the node at position j are the earlier nodes z that are
    not d-separated from it in ``g`` given the other earlier nodes.

    Args:
        g: Input DAG.
        sigma: Order over the same nodes.

    Returns:
        DAG whose edges all point forward in ``sigma``.

    Raises:
        ValueError: If ``sigma`` does not cover ``g``'s nodes.
    """
    if len(sigma) != g.n:
        raise ValueError(f"Order has {len(sigma)} nodes, DAG has {g.n}")

    parents: list[set[int]] = [set() for _ in range(g.n)]
    predecessors: list[int] = []
    for y in sigma:
        pred = set(predecessors)
        for z in predecessors:
            # Adjacent nodes are never d-separated
            if g.is_adjacent(y, z) or not d_separated(g, y, z, pred - {z}):
                parents[y].add(z)
        predecessors.append(y)
    return Dag(g.variables, parents, validate=False)
