"""Parameters of a federated structure-learning run."""

from dataclasses import dataclass, field

from fedges.config import DEFAULT_EDGE_LIMIT, DEFAULT_ESS, DEFAULT_MAX_ROUNDS
from fedges.exceptions import UsageError
from fedges.fusion.fuse import FusionPolicy
from fedges.models import ClientFusion, ConvergenceMode


@dataclass(frozen=True)
class FederationConfig:
    """Federation parameters.

    Attributes:
        k: Number of clients.
        limit: Inserts each client's forward phase may apply per round.
        max_rounds: Upper bound on federated rounds.
        client_fusion: How a client combines its DAG with the global one.
        server_policy: Server-side fusion rule.
        ess: BDeu equivalent sample size used by every client.
        seed: Experiment seed.
        convergence: Stopping criterion.
        threads: Worker pool size for client rounds.
    """

    k: int
    limit: int = DEFAULT_EDGE_LIMIT
    max_rounds: int = DEFAULT_MAX_ROUNDS
    client_fusion: ClientFusion = ClientFusion.OVERWRITE
    server_policy: FusionPolicy = field(default_factory=FusionPolicy.union)
    ess: float = DEFAULT_ESS
    seed: int = 0
    convergence: ConvergenceMode = ConvergenceMode.HISTORY
    threads: int = 1

    def __post_init__(self) -> None:
        if self.k < 1:
            raise UsageError(f"Client count must be at least 1, got {self.k}")
        if self.limit < 1:
            raise UsageError(f"Edge limit must be at least 1, got {self.limit}")
        if self.max_rounds < 1:
            raise UsageError(f"Max rounds must be at least 1, got {self.max_rounds}")
        if not self.ess > 0:
            raise UsageError(f"ess must be positive, got {self.ess}")
        if self.threads < 1:
            raise UsageError(f"Thread count must be at least 1, got {self.threads}")
