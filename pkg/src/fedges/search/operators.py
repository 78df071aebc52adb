"""Insert and Delete operators over completed PDAGs.

For nodes x and y, NA(y, x) is the set of undirected neighbours of y that
are adjacent to x.

Insert(x, y, T) joins nonadjacent x and y with x -> y and orients t -> y
for every t in T, where T holds undirected neighbours of y nonadjacent to
x. It is valid iff NA(y, x) | T is a clique and every semi-directed path
from y to x meets NA(y, x) | T.

Delete(x, y, H) removes the edge between adjacent x and y and orients
y -> h and x -> h for every h in H, a subset of NA(y, x). It is valid iff
NA(y, x) - H is a clique.

Applying either operator re-completes the result (consistent extension,
then DAG to CPDAG), so the search state is always a completed PDAG.
"""

import logging
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations

from fedges.exceptions import InvariantViolation, NoExtensionError
from fedges.graph.cpdag import dag_to_cpdag, pdag_to_dag
from fedges.graph.pdag import Pdag
from fedges.ingest.dataset import Dataset
from fedges.scoring.bdeu import ScoreCache, local_bdeu

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InsertOp:
    """Insert(x, y, T) with its score change."""

    x: int
    y: int
    t: tuple[int, ...]
    delta: float = 0.0

    def sort_key(self) -> tuple[float, int, int, int, tuple[int, ...]]:
        """Best-first ordering: larger delta, then smaller (x, y, |t|, t)."""
        return (-self.delta, self.x, self.y, len(self.t), self.t)

    def describe(self, names: list[str]) -> str:
        """Readable form using variable names."""
        t = ",".join(names[i] for i in self.t)
        return f"insert {names[self.x]}->{names[self.y]} T={{{t}}}"


@dataclass(frozen=True)
class DeleteOp:
    """Delete(x, y, H) with its score change."""

    x: int
    y: int
    h: tuple[int, ...]
    delta: float = 0.0

    def sort_key(self) -> tuple[float, int, int, int, tuple[int, ...]]:
        """Best-first ordering: larger delta, then smaller (x, y, |h|, h)."""
        return (-self.delta, self.x, self.y, len(self.h), self.h)

    def describe(self, names: list[str]) -> str:
        """Readable form using variable names."""
        h = ",".join(names[i] for i in self.h)
        return f"delete {names[self.x]}-{names[self.y]} H={{{h}}}"


def na_yx(p: Pdag, y: int, x: int) -> set[int]:
    """Undirected neighbours of ``y`` that are adjacent to ``x``."""
    return {z for z in p.neighbors(y) if p.is_adjacent(z, x)}


def _semi_directed_path_avoiding(
    p: Pdag, start: int, target: int, blocked: set[int]
) -> bool:
    """True iff a semi-directed path leads from ``start`` to ``target``
    without passing through ``blocked``."""
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in p.children(u) | p.neighbors(u):
            if v == target:
                return True
            if v in seen or v in blocked:
                continue
            seen.add(v)
            queue.append(v)
    return False


def valid_insert(p: Pdag, op: InsertOp) -> bool:
    """Check the clique and semi-directed path conditions of an Insert."""
    blocking = na_yx(p, op.y, op.x) | set(op.t)
    if not p.is_clique(sorted(blocking)):
        return False
    return not _semi_directed_path_avoiding(p, op.y, op.x, blocking)


def valid_delete(p: Pdag, op: DeleteOp) -> bool:
    """Check the clique condition of a Delete."""
    return p.is_clique(sorted(na_yx(p, op.y, op.x) - set(op.h)))


def delta_insert(
    cache: ScoreCache, dataset: Dataset, p: Pdag, x: int, y: int, t: Iterable[int]
) -> float:
    """Score change of Insert(x, y, T): only y's family changes."""
    base = na_yx(p, y, x) | set(t) | p.parents(y)
    return local_bdeu(cache, dataset, y, base | {x}) - local_bdeu(
        cache, dataset, y, base
    )


def delta_delete(
    cache: ScoreCache, dataset: Dataset, p: Pdag, x: int, y: int, h: Iterable[int]
) -> float:
    """Score change of Delete(x, y, H): only y's family changes."""
    base = (na_yx(p, y, x) - set(h)) | p.parents(y)
    return local_bdeu(cache, dataset, y, base - {x}) - local_bdeu(
        cache, dataset, y, base | {x}
    )


def _recomplete(p: Pdag) -> Pdag:
    try:
        return dag_to_cpdag(pdag_to_dag(p))
    except NoExtensionError as e:
        raise InvariantViolation(
            f"Operator result admits no consistent extension: {e}"
        ) from e


def apply_insert(p: Pdag, op: InsertOp) -> Pdag:
    """Apply an Insert and return the re-completed PDAG (``p`` is untouched)."""
    work = p.copy()
    work.add_directed(op.x, op.y)
    for t in op.t:
        work.orient(t, op.y)
    return _recomplete(work)


def apply_delete(p: Pdag, op: DeleteOp) -> Pdag:
    """Apply a Delete and return the re-completed PDAG (``p`` is untouched)."""
    work = p.copy()
    work.remove_edge(op.x, op.y)
    for h in op.h:
        work.orient(op.y, h)
        if work.has_undirected(op.x, h):
            work.orient(op.x, h)
    return _recomplete(work)


def _clique_extensions(
    p: Pdag, fixed: set[int], pool: list[int]
) -> Iterator[tuple[int, ...]]:
    """Subsets T of ``pool`` (ascending tuples) with ``fixed | T`` a clique.

    A superset of a non-clique is never a clique, so only clique subsets
    are extended.
    """
    frontier: list[tuple[int, ...]] = [()]
    while frontier:
        next_frontier = []
        for subset in frontier:
            yield subset
            start = pool.index(subset[-1]) + 1 if subset else 0
            for candidate in pool[start:]:
                members = fixed | set(subset)
                if all(p.is_adjacent(candidate, w) for w in members):
                    next_frontier.append((*subset, candidate))
        frontier = next_frontier


def insert_candidates(
    cache: ScoreCache, dataset: Dataset, p: Pdag
) -> Iterator[InsertOp]:
    """Every valid Insert on ``p`` with its delta."""
    for x in range(p.n):
        for y in range(p.n):
            if x == y or p.is_adjacent(x, y):
                continue
            na = na_yx(p, y, x)
            if not p.is_clique(sorted(na)):
                continue
            pool = sorted(z for z in p.neighbors(y) if not p.is_adjacent(z, x))
            for t in _clique_extensions(p, na, pool):
                op = InsertOp(x, y, t)
                if not valid_insert(p, op):
                    continue
                yield InsertOp(x, y, t, delta_insert(cache, dataset, p, x, y, t))


def delete_candidates(
    cache: ScoreCache, dataset: Dataset, p: Pdag
) -> Iterator[DeleteOp]:
    """Every valid Delete on ``p`` with its delta.

    Undirected edges are offered in both directions since y's family differs.
    """
    for y in range(p.n):
        for x in sorted(p.parents(y) | p.neighbors(y)):
            na = sorted(na_yx(p, y, x))
            for size in range(len(na) + 1):
                for h in combinations(na, size):
                    op = DeleteOp(x, y, h)
                    if not valid_delete(p, op):
                        continue
                    yield DeleteOp(x, y, h, delta_delete(cache, dataset, p, x, y, h))
