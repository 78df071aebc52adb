"""Convergence and cycle detection over rounds of client DAGs."""

import hashlib
import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

import orjson

from fedges.graph.dag import Dag, Edge
from fedges.models import ConvergenceMode

logger = logging.getLogger(__name__)

Structure = tuple[tuple[Edge, ...], ...]


def structure_of(dags: Sequence[Dag]) -> Structure:
    """Canonical edge lists of the DAGs in client order."""
    return tuple(tuple(g.edges()) for g in dags)


def fingerprint(dags: Sequence[Dag]) -> str:
    """SHA-256 of the canonical edge lists, independent of construction order."""
    return hashlib.sha256(orjson.dumps(structure_of(dags))).hexdigest()


@dataclass
class History:
    """Client-DAG tuples recorded in earlier rounds.

    Attributes:
        seen: Fingerprint to (structure, round last recorded).
        last: Fingerprint recorded most recently.
        rounds: Number of tuples recorded.
        period: Rounds between the repeat and its previous occurrence, once
            convergence has been detected.
    """

    seen: dict[str, tuple[Structure, int]] = field(default_factory=dict)
    last: str | None = None
    rounds: int = 0
    period: int | None = None

    def contains(self, key: str, structure: Structure) -> bool:
        """True iff the tuple was recorded before."""
        entry = self.seen.get(key)
        # Hash match is confirmed structurally
        return entry is not None and entry[0] == structure

    def record(self, key: str, structure: Structure) -> None:
        """Store a tuple as seen in the current round."""
        self.rounds += 1
        self.seen[key] = (structure, self.rounds)
        self.last = key


def convergence_check(
    history: History,
    client_dags: Sequence[Dag],
    mode: ConvergenceMode = ConvergenceMode.HISTORY,
) -> bool:
    """Decide whether the federated loop should stop.

    With HISTORY the loop stops when the current tuple of client DAGs
    appeared in any earlier round; with UNCHANGED only when it equals the
    previous round's tuple. A tuple that does not stop the loop is recorded.

    Args:
        history: Tuples of earlier rounds, updated in place.
        client_dags: Client DAGs of the current round.
        mode: Stopping criterion.

    Returns:
        True iff the loop should stop.
    """
    structure = structure_of(client_dags)
    key = fingerprint(client_dags)

    if mode is ConvergenceMode.UNCHANGED:
        repeated = key == history.last and history.contains(key, structure)
    else:
        repeated = history.contains(key, structure)

    if repeated:
        previous = history.seen[key][1]
        history.period = history.rounds + 1 - previous
        if history.period > 1:
            logger.warning(
                f"Client DAGs repeat a tuple from {history.period} rounds earlier; "
                "stopping on a cycle"
            )
        return True

    history.record(key, structure)
    return False
