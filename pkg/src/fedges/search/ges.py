"""Greedy Equivalence Search: an edge-limited forward phase then a backward phase."""

import logging
from dataclasses import dataclass, field

from fedges.graph.cpdag import dag_to_cpdag, pdag_to_dag
from fedges.graph.dag import Dag
from fedges.graph.pdag import Pdag
from fedges.ingest.dataset import Dataset
from fedges.models import SearchPhase
from fedges.scoring.bdeu import ScoreCache, total_score
from fedges.search.operators import (
    DeleteOp,
    InsertOp,
    apply_delete,
    apply_insert,
    delete_candidates,
    insert_candidates,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceEntry:
    """One applied operator.

    Attributes:
        phase: FES or BES.
        op: The applied operator (carries its delta).
    """

    phase: SearchPhase
    op: InsertOp | DeleteOp

    @property
    def delta(self) -> float:
        """Score change of the operator."""
        return self.op.delta


@dataclass
class GesResult:
    """Outcome of one GES run.

    Attributes:
        dag: Consistent extension of the final CPDAG.
        cpdag: Final completed PDAG.
        edges_added: Insert operators applied in the forward phase.
        score: Total BDeu score of ``dag``.
        trace: Applied operators in order.
    """

    dag: Dag
    cpdag: Pdag
    edges_added: int
    score: float
    trace: list[TraceEntry] = field(default_factory=list)


def _best_insert(cache: ScoreCache, dataset: Dataset, p: Pdag) -> InsertOp | None:
    best: InsertOp | None = None
    for op in insert_candidates(cache, dataset, p):
        if op.delta > 0 and (best is None or op.sort_key() < best.sort_key()):
            best = op
    return best


def _best_delete(cache: ScoreCache, dataset: Dataset, p: Pdag) -> DeleteOp | None:
    best: DeleteOp | None = None
    for op in delete_candidates(cache, dataset, p):
        if op.delta > 0 and (best is None or op.sort_key() < best.sort_key()):
            best = op
    return best


def fes(
    p0: Pdag,
    cache: ScoreCache,
    dataset: Dataset,
    limit: int | None,
    trace: list[TraceEntry] | None = None,
) -> tuple[Pdag, int]:
    """Forward phase: apply the best positive Insert until none remains.

    Args:
        p0: Starting completed PDAG (not modified).
        cache: Score cache bound to ``dataset``.
        dataset: Client data.
        limit: Maximum number of inserts; None for unlimited.
        trace: Optional list that applied operators are appended to.

    Returns:
        Tuple of (final completed PDAG, number of inserts applied).

    Raises:
        ValueError: If ``limit`` is negative.
    """
    if limit is not None and limit < 0:
        raise ValueError(f"Edge limit must be non-negative, got {limit}")
    p = p0.copy()
    added = 0
    names = p.variables.names
    while limit is None or added < limit:
        op = _best_insert(cache, dataset, p)
        if op is None:
            break
        p = apply_insert(p, op)
        added += 1
        logger.debug(f"FES {op.describe(names)} delta={op.delta:.4f}")
        if trace is not None:
            trace.append(TraceEntry(SearchPhase.FORWARD, op))
    return p, added


def bes(
    p: Pdag,
    cache: ScoreCache,
    dataset: Dataset,
    trace: list[TraceEntry] | None = None,
) -> Pdag:
    """Backward phase: apply the best positive Delete until none remains."""
    p = p.copy()
    names = p.variables.names
    while (op := _best_delete(cache, dataset, p)) is not None:
        p = apply_delete(p, op)
        logger.debug(f"BES {op.describe(names)} delta={op.delta:.4f}")
        if trace is not None:
            trace.append(TraceEntry(SearchPhase.BACKWARD, op))
    return p


def ges(
    init: Dag, dataset: Dataset, limit: int | None, cache: ScoreCache
) -> GesResult:
    """Run GES starting from the equivalence class of ``init``.

    Args:
        init: Starting DAG over the dataset's variables.
        dataset: Client data.
        limit: Forward-phase insert limit; None for unlimited.
        cache: Score cache bound to ``dataset``.

    Returns:
        GesResult whose DAG scores at least as well as ``init``.

    Raises:
        ValueError: If ``init`` is over different variables than ``dataset``.
    """
    if init.variables != dataset.variables:
        raise ValueError("Initial DAG and dataset use different variables")

    trace: list[TraceEntry] = []
    p0 = dag_to_cpdag(init)
    p1, added = fes(p0, cache, dataset, limit, trace)
    p2 = bes(p1, cache, dataset, trace)
    dag = pdag_to_dag(p2)
    score = total_score(cache, dataset, dag)
    logger.debug(
        f"GES finished: {added} inserts, {len(trace) - added} deletes, "
        f"{dag.edge_count} edges, score={score:.4f} "
        f"(cache {cache.hits} hits / {cache.misses} misses)"
    )
    return GesResult(dag=dag, cpdag=p2, edges_added=added, score=score, trace=trace)
