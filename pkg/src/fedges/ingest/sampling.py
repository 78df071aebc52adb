"""Forward sampling and horizontal partitioning.

All randomness flows from one experiment seed. Each purpose ("sample",
"partition", ...) gets its own PCG64 stream derived from ``(seed, purpose)``.
"""

import logging
import zlib

import numpy as np

from fedges.exceptions import UsageError
from fedges.graph.dag import topological_order
from fedges.ingest.dataset import Dataset
from fedges.ingest.network import BayesNet

logger = logging.getLogger(__name__)


def derive_rng(seed: int, purpose: str) -> np.random.Generator:
    """Return a PCG64 generator for one purpose of an experiment seed.

    Args:
        seed: Non-negative experiment seed.
        purpose: Stream label; distinct labels give independent streams.

    Raises:
        UsageError: If the seed is negative.
    """
    if seed < 0:
        raise UsageError(f"Seed must be non-negative, got {seed}")
    tag = zlib.crc32(purpose.encode("utf-8"))
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, tag])))


def forward_sample(net: BayesNet, m: int, seed: int) -> Dataset:
    """Draw ``m`` i.i.d. rows from a network by ancestral sampling.

    Nodes are visited in topological order. For each node the CPT row is
    selected by the already-sampled parent codes and one uniform draw per
    row picks the category.

    Args:
        net: Ground-truth network.
        m: Number of rows (>= 0).
        seed: Experiment seed.

    Returns:
        Dataset over the network's variables.

    Raises:
        UsageError: If ``m`` is negative.
    """
    if m < 0:
        raise UsageError(f"Row count must be non-negative, got {m}")
    variables = net.variables
    if m == 0:
        return Dataset.empty(variables)

    rng = derive_rng(seed, "sample")
    cards = variables.cardinalities
    codes = np.zeros((m, len(variables)), dtype=np.int64, order="F")

    for node in topological_order(net.dag):
        cpt = net.cpts[node]
        rows = np.zeros(m, dtype=np.int64)
        for parent in cpt.parents:  # ascending, last parent fastest
            rows = rows * cards[parent] + codes[:, parent]
        cumulative = np.cumsum(cpt.table[rows], axis=1)
        u = rng.random(m)
        drawn = np.sum(cumulative <= u[:, None], axis=1)
        codes[:, node] = np.minimum(drawn, cards[node] - 1)

    logger.info(f"Sampled {m} rows from {net.name} (seed {seed})")
    return Dataset(variables, codes)


def partition_horizontal(
    dataset: Dataset, k: int, seed: int, *, shuffle: bool = True
) -> list[Dataset]:
    """Split rows across ``k`` clients.

    Rows are shuffled by the seed (unless ``shuffle`` is False) and dealt
    in contiguous blocks. Block sizes differ by at most one; the remainder
    goes to the lowest-indexed clients.

    Args:
        dataset: Full dataset.
        k: Number of clients (>= 1).
        seed: Experiment seed.
        shuffle: Shuffle before dealing.

    Returns:
        ``k`` datasets sharing the input VariableSet.

    Raises:
        UsageError: If ``k < 1`` or ``k`` exceeds the row count.
    """
    if k < 1:
        raise UsageError(f"Client count must be at least 1, got {k}")
    if k > dataset.m:
        raise UsageError(f"Cannot split {dataset.m} rows across {k} clients")

    if shuffle:
        order = derive_rng(seed, "partition").permutation(dataset.m)
    else:
        order = np.arange(dataset.m)

    parts = [dataset.take(block) for block in np.array_split(order, k)]
    logger.info(
        f"Partitioned {dataset.m} rows across {k} clients "
        f"(sizes {parts[0].m}..{parts[-1].m})"
    )
    return parts
