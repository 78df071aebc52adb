"""Conversions between DAGs and completed PDAGs.

A completed PDAG is obtained from the pattern of a DAG (skeleton plus its
v-structures) by closing it under the four Meek orientation rules. A
consistent extension is recovered with the Dor-Tarsi sink elimination.
"""

import logging

from fedges.exceptions import CycleError, NoExtensionError
from fedges.graph.dag import Dag
from fedges.graph.pdag import Pdag

logger = logging.getLogger(__name__)


def _meek_orients(p: Pdag, a: int, b: int) -> bool:
    """True iff one of the Meek rules compels ``a -> b`` for the edge ``a - b``."""
    # R1: c -> a - b with c, b nonadjacent
    if any(not p.is_adjacent(c, b) for c in p.parents(a)):
        return True
    # R2: a -> c -> b
    if any(p.has_directed(c, b) for c in p.children(a)):
        return True
    undirected_a = sorted(p.neighbors(a) - {b})
    # R3: a - c -> b and a - d -> b with c, d nonadjacent
    into_b = [c for c in undirected_a if p.has_directed(c, b)]
    for i, c in enumerate(into_b):
        for d in into_b[i + 1 :]:
            if not p.is_adjacent(c, d):
                return True
    # R4: a - c -> d -> b with a adjacent to d and c, b nonadjacent
    for c in undirected_a:
        if p.is_adjacent(c, b):
            continue
        for d in p.children(c):
            if d != a and p.has_directed(d, b) and p.is_adjacent(a, d):
                return True
    return False


def apply_meek_rules(p: Pdag) -> Pdag:
    """Close a PDAG under the Meek orientation rules.

    Args:
        p: Input PDAG (not modified).

    Returns:
        A new PDAG at the rules' fixpoint.

    Raises:
        CycleError: If the orientations produce a directed cycle.
    """
    result = p.copy()
    changed = True
    while changed:
        changed = False
        for u, v in result.undirected_edges():
            if _meek_orients(result, u, v):
                result.orient(u, v)
                changed = True
            elif _meek_orients(result, v, u):
                result.orient(v, u)
                changed = True
    if not result.is_directed_acyclic():
        raise CycleError("Meek closure produced a directed cycle")
    return result


def dag_to_cpdag(g: Dag) -> Pdag:
    """Completed PDAG of the Markov equivalence class of ``g``."""
    pattern = Pdag(g.variables)
    compelled = set()
    for a, b, c in g.v_structures():
        compelled.add((a, b))
        compelled.add((c, b))
    for tail, head in g.edges():
        if (tail, head) in compelled:
            pattern.add_directed(tail, head)
        else:
            pattern.add_undirected(tail, head)
    return apply_meek_rules(pattern)


def pdag_to_dag(p: Pdag) -> Dag:
    """Consistent extension of a PDAG.

    Repeatedly removes a sink whose undirected neighbours are adjacent to all
    of its other adjacent nodes, orienting its undirected edges inwards.

    Ties go to the lowest-index node first in the extension's order. The order
    is built from the back, so among admissible sinks the highest index is
    removed first; the undirected chain A-B-C therefore becomes A->B->C.

    Raises:
        NoExtensionError: If no consistent extension exists.
    """
    work = p.copy()
    parents: list[set[int]] = [set(p.parents(v)) for v in range(p.n)]
    remaining = set(range(p.n))
    while remaining:
        chosen = None
        for x in sorted(remaining, reverse=True):
            if work.children(x):
                continue
            adjacent = work.adjacent(x)
            if all(_covers(work, y, adjacent) for y in work.neighbors(x)):
                chosen = x
                break
        if chosen is None:
            raise NoExtensionError(
                f"PDAG has no consistent extension ({len(remaining)} nodes left)"
            )
        for y in sorted(work.neighbors(chosen)):
            parents[chosen].add(y)
        for other in sorted(work.adjacent(chosen)):
            work.remove_edge(chosen, other)
        remaining.discard(chosen)
    return Dag(p.variables, parents)


def _covers(p: Pdag, y: int, adjacent: set[int]) -> bool:
    """True iff ``y`` is adjacent to every node in ``adjacent`` other than itself."""
    return all(p.is_adjacent(y, w) for w in adjacent if w != y)
