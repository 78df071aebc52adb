"""Round loop of the federated simulation and the one-shot baseline."""

import logging
import time
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import TypeVar

from fedges.exceptions import UsageError
from fedges.federation.client import ClientState, client_round
from fedges.federation.config import FederationConfig
from fedges.federation.convergence import History, convergence_check
from fedges.federation.server import server_round
from fedges.fusion.fuse import FusionPolicy, fuse
from fedges.graph.dag import Dag
from fedges.ingest.dataset import Dataset
from fedges.metrics.smhd import smhd
from fedges.scoring.bdeu import ScoreCache
from fedges.search.ges import ges

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


@dataclass(frozen=True)
class ClientRoundReport:
    """Outcome of one client in one round.

    Attributes:
        client_id: Client index.
        edges_added: Inserts applied by the forward phase.
        edge_count: Edges of the client's new DAG.
        init_score: Local score of the starting DAG.
        score: Local score of the new DAG.
        smhd: Distance to the true DAG, when one was supplied.
        cpu_time: CPU seconds the client's thread spent on the round.
    """

    client_id: int
    edges_added: int
    edge_count: int
    init_score: float
    score: float
    smhd: int | None = None
    cpu_time: float = 0.0


@dataclass(frozen=True)
class RoundReport:
    """Outcome of one federated round.

    ``server_edges`` is None in the round that converged, since the server
    does not fuse after convergence is detected.
    """

    round: int
    clients: tuple[ClientRoundReport, ...]
    converged: bool
    server_edges: int | None = None
    server_smhd: int | None = None
    wall_time: float = 0.0
    server_cpu_time: float = 0.0

    @property
    def cpu_time(self) -> float:
        """Client plus server CPU seconds of the round."""
        return sum(c.cpu_time for c in self.clients) + self.server_cpu_time


@dataclass
class FedgesResult:
    """Final state of a federated run.

    Attributes:
        dag: Last global DAG produced by the server.
        client_dags: Final client DAGs in client order.
        rounds: Per-round reports.
        converged: Whether the loop stopped before max_rounds ran out.
    """

    dag: Dag
    client_dags: list[Dag]
    rounds: list[RoundReport] = field(default_factory=list)
    converged: bool = False

    @property
    def cpu_time_per_client(self) -> float:
        """Summed client and server CPU seconds over all rounds, divided by k."""
        return sum(r.cpu_time for r in self.rounds) / len(self.client_dags)


@dataclass
class BaselineResult:
    """Outcome of the one-shot baseline.

    Attributes:
        dag: Union of the locally learned DAGs.
        client_dags: Locally learned DAGs in client order.
        cpu_time: Summed client and fusion CPU seconds.
    """

    dag: Dag
    client_dags: list[Dag]
    cpu_time: float = 0.0

    @property
    def cpu_time_per_client(self) -> float:
        return self.cpu_time / len(self.client_dags)


def _check_datasets(datasets: Sequence[Dataset], k: int | None = None) -> None:
    if not datasets:
        raise UsageError("At least one client dataset is required")
    if k is not None and len(datasets) != k:
        raise UsageError(f"Configured for {k} clients, got {len(datasets)} datasets")
    variables = datasets[0].variables
    if any(d.variables != variables for d in datasets[1:]):
        raise UsageError("Client datasets use different variables")


def _map_ordered(fn: Callable[[T], R], items: Sequence[T], threads: int) -> list[R]:
    """Apply ``fn`` to every item; results are in item order."""
    if threads == 1 or len(items) == 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(threads, len(items))) as pool:
        return list(pool.map(fn, items))


def _thread_timed(fn: Callable[[T], R]) -> Callable[[T], tuple[R, float]]:
    """Wrap ``fn`` to also return the CPU seconds its calling thread used."""

    def timed(item: T) -> tuple[R, float]:
        started = time.thread_time()
        value = fn(item)
        return value, time.thread_time() - started

    return timed


def run_fedges(
    cfg: FederationConfig,
    datasets: Sequence[Dataset],
    truth: Dag | None = None,
) -> FedgesResult:
    """Run the federated loop.

    Every DAG starts empty. Each round runs all client rounds, checks for
    convergence, then fuses the client DAGs on the server.

    Args:
        cfg: Federation parameters.
        datasets: One partition per client, sharing one VariableSet.
        truth: Optional true DAG; only used to add SMHD figures to reports.

    Returns:
        FedgesResult with the final global and client DAGs.

    Raises:
        UsageError: If the datasets do not match the configuration.
    """
    _check_datasets(datasets, cfg.k)
    variables = datasets[0].variables
    clients = [
        ClientState.initial(i, dataset, cfg.ess) for i, dataset in enumerate(datasets)
    ]
    global_dag = Dag.empty(variables)
    history = History()
    result = FedgesResult(dag=global_dag, client_dags=[c.dag for c in clients])

    for round_index in range(1, cfg.max_rounds + 1):
        started = time.perf_counter()
        timed = _map_ordered(
            _thread_timed(partial(client_round, global_dag=global_dag, cfg=cfg)),
            clients,
            cfg.threads,
        )
        client_dags = [dag for dag, _ in timed]
        client_reports = tuple(
            ClientRoundReport(
                client_id=c.client_id,
                edges_added=c.last_result.edges_added if c.last_result else 0,
                edge_count=c.dag.edge_count,
                init_score=c.init_score or 0.0,
                score=c.last_result.score if c.last_result else 0.0,
                smhd=smhd(c.dag, truth) if truth is not None else None,
                cpu_time=cpu,
            )
            for c, (_, cpu) in zip(clients, timed, strict=True)
        )
        result.client_dags = client_dags

        if convergence_check(history, client_dags, cfg.convergence):
            result.rounds.append(
                RoundReport(
                    round=round_index,
                    clients=client_reports,
                    converged=True,
                    wall_time=time.perf_counter() - started,
                )
            )
            result.converged = True
            logger.info(f"Converged at round {round_index}")
            break

        server_started = time.thread_time()
        global_dag, _ = server_round(client_dags, cfg)
        server_cpu = time.thread_time() - server_started
        result.dag = global_dag
        result.rounds.append(
            RoundReport(
                round=round_index,
                clients=client_reports,
                converged=False,
                server_edges=global_dag.edge_count,
                server_smhd=smhd(global_dag, truth) if truth is not None else None,
                wall_time=time.perf_counter() - started,
                server_cpu_time=server_cpu,
            )
        )
        logger.info(
            f"Round {round_index}: client edges "
            f"{[r.edge_count for r in client_reports]}, "
            f"server edges {global_dag.edge_count}"
        )
    else:
        logger.warning(f"Stopped after max_rounds={cfg.max_rounds} without convergence")

    return result


def run_oneshot_baseline(
    datasets: Sequence[Dataset], ess: float, threads: int = 1
) -> BaselineResult:
    """Run unlimited GES on every client and fuse the results once by union.

    Args:
        datasets: One partition per client, sharing one VariableSet.
        ess: BDeu equivalent sample size.
        threads: Worker pool size.

    Returns:
        BaselineResult with the fused DAG and the client DAGs.

    Raises:
        UsageError: If the datasets use different variables.
    """
    _check_datasets(datasets)
    variables = datasets[0].variables

    def learn(dataset: Dataset) -> Dag:
        return ges(Dag.empty(variables), dataset, None, ScoreCache(ess=ess)).dag

    timed = _map_ordered(_thread_timed(learn), datasets, threads)
    client_dags = [dag for dag, _ in timed]
    fusion_started = time.thread_time()
    dag, _ = fuse(client_dags, FusionPolicy.union())
    fusion_cpu = time.thread_time() - fusion_started
    logger.info(
        f"One-shot baseline: client edges {[g.edge_count for g in client_dags]}, "
        f"fused edges {dag.edge_count}"
    )
    return BaselineResult(
        dag=dag,
        client_dags=client_dags,
        cpu_time=sum(cpu for _, cpu in timed) + fusion_cpu,
    )
