"""Server side of a federated round: structural fusion of client DAGs only."""

import logging
from collections.abc import Sequence

from fedges.federation.config import FederationConfig
from fedges.fusion.fuse import FusionReport, fuse
from fedges.graph.dag import Dag

logger = logging.getLogger(__name__)


def server_round(
    client_dags: Sequence[Dag], cfg: FederationConfig
) -> tuple[Dag, FusionReport]:
    """Fuse the client DAGs with the server policy.

    Args:
        client_dags: One DAG per client, in client order.
        cfg: Federation parameters.

    Returns:
        Tuple of (global DAG, FusionReport).
    """
    dag, report = fuse(client_dags, cfg.server_policy)
    logger.debug(
        f"Server fused {len(client_dags)} DAGs with {cfg.server_policy.name}: "
        f"{dag.edge_count} edges"
    )
    return dag, report
