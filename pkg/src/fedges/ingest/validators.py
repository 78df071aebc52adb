"""Gatekeeper checks for networks and datasets."""

import logging
from dataclasses import dataclass, field

import numpy as np

from fedges.ingest.dataset import Dataset
from fedges.ingest.network import BayesNet

logger = logging.getLogger(__name__)


@dataclass
class ValidationResult:
    """Result of a gatekeeper check.

    Attributes:
        is_valid: Whether the check passed.
        message: Human-readable description of the result.
        row_count: Rows in the validated dataset (0 for networks).
        warnings: Non-fatal issues detected.
    """

    is_valid: bool
    message: str
    row_count: int = 0
    warnings: list[str] = field(default_factory=list)


def validate_network(net: BayesNet) -> ValidationResult:
    """Check a ground-truth network before sampling from it.

    Fails on an empty network. Warns about isolated nodes and about
    deterministic CPT rows, which leave some categories unobservable.

    Args:
        net: Parsed network.

    Returns:
        ValidationResult with status and warnings.
    """
    if net.dag.n == 0:
        return ValidationResult(is_valid=False, message=f"{net.name}: no variables")

    warnings: list[str] = []
    isolated = [
        net.variables[v].name
        for v in range(net.dag.n)
        if not net.dag.pa(v) and not net.dag.children(v)
    ]
    if isolated:
        warnings.append(f"Isolated nodes: {', '.join(isolated)}")

    deterministic = [
        net.variables[cpt.child].name
        for cpt in net.cpts
        if np.any(np.isclose(cpt.table.max(axis=1), 1.0))
    ]
    if deterministic:
        warnings.append(f"Deterministic CPT rows in: {', '.join(deterministic)}")

    for w in warnings:
        logger.warning(f"{net.name}: {w}")

    return ValidationResult(
        is_valid=True,
        message=(
            f"{net.name}: {net.dag.n} nodes, {net.dag.edge_count} edges, "
            f"{net.parameter_count} parameters"
        ),
        warnings=warnings,
    )


def validate_dataset_against(net: BayesNet, dataset: Dataset) -> ValidationResult:
    """Check that a dataset uses the network's variables and domains.

    Fails when names or category lists differ or the dataset is empty.
    Warns about categories never observed, which is common on small
    client partitions.

    Args:
        net: Network that defines the shared domains.
        dataset: Dataset to check.

    Returns:
        ValidationResult with status and warnings.
    """
    expected = net.variables
    actual = dataset.variables
    if expected.names != actual.names:
        return ValidationResult(
            is_valid=False,
            message="Dataset variables differ from the network",
            row_count=dataset.m,
        )
    mismatched = [
        e.name
        for e, a in zip(expected, actual, strict=True)
        if e.categories != a.categories
    ]
    if mismatched:
        return ValidationResult(
            is_valid=False,
            message=f"Category lists differ for: {', '.join(mismatched)}",
            row_count=dataset.m,
        )
    if dataset.m == 0:
        return ValidationResult(
            is_valid=False, message="Dataset has no rows", row_count=0
        )

    warnings: list[str] = []
    for var in actual:
        seen = np.unique(dataset.column(var.index)).size
        if seen < var.cardinality:
            warnings.append(
                f"{var.name}: {var.cardinality - seen} of {var.cardinality} "
                "categories never observed"
            )

    return ValidationResult(
        is_valid=True,
        message=f"Dataset matches {net.name}: {dataset.m} rows",
        row_count=dataset.m,
        warnings=warnings,
    )
