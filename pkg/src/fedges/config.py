"""Configuration management for fedges."""

import logging
import os
from dataclasses import dataclass
from pathlib import Path

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

DEFAULT_ESS = 1.0
DEFAULT_EDGE_LIMIT = 10
DEFAULT_MAX_ROUNDS = 50


@dataclass
class Settings:
    """Runtime settings loaded from environment variables.

    Attributes:
        log_level: Logging verbosity level.
        threads: Worker pool size used for client rounds.
        output_dir: Directory where reports and sampled datasets are written.
        network_dir: Directory searched for BIF networks given by bare name.
        ess: Default BDeu equivalent sample size.
    """

    log_level: str
    threads: int
    output_dir: Path
    network_dir: Path
    ess: float

    @classmethod
    def from_env(cls) -> "Settings":
        """Load settings from environment variables.

        Returns:
            Settings instance with loaded configuration.

        Raises:
            ValueError: If a numeric variable cannot be parsed or is not positive.
        """
        load_dotenv()

        log_level = os.getenv("LOG_LEVEL", "INFO").upper()
        threads = int(os.getenv("FEDGES_THREADS", "1"))
        output_dir = Path(os.getenv("FEDGES_OUTPUT_DIR", "./results"))
        network_dir = Path(os.getenv("FEDGES_NETWORK_DIR", "./data/networks"))
        ess = float(os.getenv("FEDGES_ESS", str(DEFAULT_ESS)))

        if threads < 1:
            raise ValueError(f"FEDGES_THREADS must be >= 1, got {threads}")
        if ess <= 0:
            raise ValueError(f"FEDGES_ESS must be positive, got {ess}")

        logger.debug(
            f"Loaded settings: log_level={log_level}, threads={threads}, "
            f"output_dir={output_dir}, network_dir={network_dir}, ess={ess}"
        )

        return cls(
            log_level=log_level,
            threads=threads,
            output_dir=output_dir,
            network_dir=network_dir,
            ess=ess,
        )

    def ensure_directories(self) -> None:
        """Create required directories if they don't exist."""
        self.output_dir.mkdir(parents=True, exist_ok=True)
        logger.debug(f"Ensured output directory exists: {self.output_dir}")

    def resolve_network(self, network: str | Path) -> Path:
        """Resolve a network argument to a BIF path.

        A value that is an existing path is used as is; otherwise it is looked
        up as ``<network_dir>/<name>.bif``.

        Args:
            network: Path or bare network name (e.g. ``"child"``).

        Returns:
            Path to the BIF file (may not exist).
        """
        path = Path(network)
        if path.exists():
            return path
        candidate = self.network_dir / f"{path.stem.lower()}.bif"
        logger.debug(f"Resolved network {network!r} to {candidate}")
        return candidate
