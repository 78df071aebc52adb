"""Validated experiment specification."""

from typing import Literal

from pydantic import (
    BaseModel,
    ConfigDict,
    NonNegativeInt,
    PositiveFloat,
    PositiveInt,
)

from fedges.config import DEFAULT_EDGE_LIMIT, DEFAULT_ESS, DEFAULT_MAX_ROUNDS
from fedges.federation.config import FederationConfig
from fedges.fusion.fuse import FusionPolicy
from fedges.models import ClientFusion, ConvergenceMode


class ExperimentSpec(BaseModel):
    """One cell of the experiment grid.

    The dump of this model is echoed into every report, so a report is
    enough to rerun its experiment.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    network: str
    samples: PositiveInt = 10
    rows: PositiveInt = 5000
    clients: PositiveInt = 5
    limit: PositiveInt = DEFAULT_EDGE_LIMIT
    max_rounds: PositiveInt = DEFAULT_MAX_ROUNDS
    fusion_server: Literal["union", "c25", "c50"] = "union"
    fusion_client: Literal["overwrite", "fuse"] = "overwrite"
    baseline: Literal["oneshot-ges"] | None = None
    convergence: Literal["history", "unchanged"] = "history"
    ess: PositiveFloat = DEFAULT_ESS
    seed: NonNegativeInt = 0
    threads: PositiveInt = 1
    shuffle: bool = True
    data_dir: str | None = None
    out: str

    @property
    def fusion_label(self) -> str:
        """Column value for the summary table."""
        return self.baseline or self.fusion_server

    def sample_seed(self, index: int) -> int:
        """Seed of the ``index``-th sample."""
        return self.seed + index

    def federation_config(self, index: int) -> FederationConfig:
        """Federation parameters for the ``index``-th sample."""
        return FederationConfig(
            k=self.clients,
            limit=self.limit,
            max_rounds=self.max_rounds,
            client_fusion=ClientFusion(self.fusion_client),
            server_policy=FusionPolicy.from_name(self.fusion_server),
            ess=self.ess,
            seed=self.sample_seed(index),
            convergence=ConvergenceMode(self.convergence),
            threads=self.threads,
        )
