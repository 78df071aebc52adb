"""Federation module for fedges.

This module handles:
- Federation parameters and per-client private state
- Client rounds (local fusion, edge-limited GES) and server rounds (fusion)
- Convergence and cycle detection over rounds
- The federated round loop and the one-shot baseline
"""

from fedges.federation.client import ClientState, client_round
from fedges.federation.config import FederationConfig
from fedges.federation.convergence import (
    History,
    convergence_check,
    fingerprint,
    structure_of,
)
from fedges.federation.runner import (
    BaselineResult,
    ClientRoundReport,
    FedgesResult,
    RoundReport,
    run_fedges,
    run_oneshot_baseline,
)
from fedges.federation.server import server_round

__all__ = [
    # Configuration and state
    "FederationConfig",
    "ClientState",
    # Rounds
    "client_round",
    "server_round",
    # Convergence
    "History",
    "convergence_check",
    "fingerprint",
    "structure_of",
    # Runs
    "ClientRoundReport",
    "RoundReport",
    "FedgesResult",
    "BaselineResult",
    "run_fedges",
    "run_oneshot_baseline",
]
