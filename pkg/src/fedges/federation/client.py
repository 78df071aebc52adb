"""Client side of a federated round: local fusion then edge-limited GES.

A client's dataset and score cache never leave this module.
"""

import logging
from dataclasses import dataclass, field

from fedges.federation.config import FederationConfig
from fedges.fusion.fuse import FusionPolicy, fuse
from fedges.graph.dag import Dag
from fedges.ingest.dataset import Dataset
from fedges.models import ClientFusion
from fedges.scoring.bdeu import ScoreCache, total_score
from fedges.search.ges import GesResult, ges

logger = logging.getLogger(__name__)


@dataclass
class ClientState:
    """Private state of one client.

    Attributes:
        client_id: 0-based client index.
        dataset: Local data partition.
        dag: Current local DAG.
        cache: Local score cache.
        init_score: Score of the DAG the last GES run started from.
        last_result: Outcome of the last GES run.
    """

    client_id: int
    dataset: Dataset
    dag: Dag
    cache: ScoreCache
    init_score: float | None = None
    last_result: GesResult | None = field(default=None, repr=False)

    @classmethod
    def initial(cls, client_id: int, dataset: Dataset, ess: float) -> "ClientState":
        """Client with an empty DAG and a fresh cache."""
        return cls(
            client_id=client_id,
            dataset=dataset,
            dag=Dag.empty(dataset.variables),
            cache=ScoreCache(ess=ess),
        )


def client_round(state: ClientState, global_dag: Dag, cfg: FederationConfig) -> Dag:
    """Run one client round.

    The starting DAG is the global DAG (overwrite) or the union fusion of
    the local and global DAGs (fuse). GES then runs from it with the
    configured edge limit and the result becomes the client's DAG.

    Args:
        state: Client state, updated in place.
        global_dag: Latest server DAG.
        cfg: Federation parameters.

    Returns:
        The client's new DAG.
    """
    if cfg.client_fusion is ClientFusion.OVERWRITE:
        start = global_dag
    else:
        start, _ = fuse([state.dag, global_dag], FusionPolicy.union())

    state.init_score = total_score(state.cache, state.dataset, start)
    result = ges(start, state.dataset, cfg.limit, state.cache)
    state.dag = result.dag
    state.last_result = result
    logger.debug(
        f"Client {state.client_id}: +{result.edges_added} inserts, "
        f"{result.dag.edge_count} edges, score {state.init_score:.2f} -> "
        f"{result.score:.2f}"
    )
    return result.dag
