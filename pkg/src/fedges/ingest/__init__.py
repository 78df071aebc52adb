"""Data ingestion module for fedges.

This module handles:
- Parsing and writing BIF networks (ground-truth models)
- Forward sampling and horizontal partitioning of datasets
- Loading and saving CSV datasets and domain metadata files
- Gatekeeper checks on networks and datasets
"""

from fedges.ingest.bif import load_bif, parse_bif, render_bif
from fedges.ingest.dataset import Dataset
from fedges.ingest.loaders import load_dataset, load_domain, save_dataset, save_domain
from fedges.ingest.network import BayesNet, Cpt
from fedges.ingest.sampling import derive_rng, forward_sample, partition_horizontal
from fedges.ingest.validators import (
    ValidationResult,
    validate_dataset_against,
    validate_network,
)

__all__ = [
    # Types
    "BayesNet",
    "Cpt",
    "Dataset",
    # BIF
    "parse_bif",
    "load_bif",
    "render_bif",
    # Loaders
    "load_dataset",
    "save_dataset",
    "load_domain",
    "save_domain",
    # Sampling
    "derive_rng",
    "forward_sample",
    "partition_horizontal",
    # Validators
    "ValidationResult",
    "validate_network",
    "validate_dataset_against",
]
