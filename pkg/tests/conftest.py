"""Shared pytest fixtures for fedges tests."""

import os
from collections.abc import Generator
from pathlib import Path
from unittest.mock import patch

import numpy as np
import pytest

from fedges.graph import Dag
from fedges.ingest import BayesNet, Cpt, Dataset, load_bif
from fedges.models import VariableSet

NETWORK_DIR = Path(__file__).parent.parent / "data" / "networks"
STRUCTURE_DIR = NETWORK_DIR / "structures"

CHILD_NODES = [
    "BirthAsphyxia",
    "HypDistrib",
    "HypoxiaInO2",
    "CO2",
    "ChestXray",
    "Grunting",
    "LVHreport",
    "LowerBodyO2",
    "RUQO2",
    "CO2Report",
    "XrayReport",
    "Disease",
    "GruntingReport",
    "Age",
    "LVH",
    "DuctFlow",
    "CardiacMixing",
    "LungParench",
    "LungFlow",
    "Sick",
]

CHILD_EDGES = [
    ("BirthAsphyxia", "Disease"),
    ("Disease", "LVH"),
    ("Disease", "DuctFlow"),
    ("Disease", "CardiacMixing"),
    ("Disease", "LungParench"),
    ("Disease", "LungFlow"),
    ("Disease", "Sick"),
    ("Disease", "Age"),
    ("LVH", "LVHreport"),
    ("DuctFlow", "HypDistrib"),
    ("CardiacMixing", "HypDistrib"),
    ("CardiacMixing", "HypoxiaInO2"),
    ("LungParench", "HypoxiaInO2"),
    ("LungParench", "CO2"),
    ("LungParench", "ChestXray"),
    ("LungParench", "Grunting"),
    ("LungFlow", "ChestXray"),
    ("Sick", "Grunting"),
    ("Sick", "Age"),
    ("HypoxiaInO2", "LowerBodyO2"),
    ("HypoxiaInO2", "RUQO2"),
    ("HypDistrib", "LowerBodyO2"),
    ("CO2", "CO2Report"),
    ("ChestXray", "XrayReport"),
    ("Grunting", "GruntingReport"),
]


def repository_network(name: str) -> Path:
    """Path of a repository BIF network; skips the test when it is absent."""
    path = NETWORK_DIR / f"{name}.bif"
    if not path.exists():
        pytest.skip(f"Network not available: {path}")
    return path


@pytest.fixture
def mock_env_vars() -> Generator[dict[str, str], None, None]:
    """Set up mock environment variables for testing.

    Yields:
        Dictionary of mock environment variables.
    """
    env_vars = {
        "LOG_LEVEL": "DEBUG",
        "FEDGES_THREADS": "3",
        "FEDGES_OUTPUT_DIR": "/tmp/fedges_results",
        "FEDGES_NETWORK_DIR": str(NETWORK_DIR),
        "FEDGES_ESS": "2.5",
    }
    with patch.dict(os.environ, env_vars, clear=False):
        yield env_vars


@pytest.fixture
def abc() -> VariableSet:
    """Three binary variables A, B, C."""
    return VariableSet.binary(["A", "B", "C"])


@pytest.fixture
def abcd() -> VariableSet:
    """Four binary variables A, B, C, D."""
    return VariableSet.binary(["A", "B", "C", "D"])


@pytest.fixture
def child_dag() -> Dag:
    """Structure of the Child network (20 nodes, 25 edges) over binary stand-ins."""
    return Dag.from_named_edges(VariableSet.binary(CHILD_NODES), CHILD_EDGES)


@pytest.fixture
def asia_path() -> Path:
    """Bundled Asia network file."""
    return NETWORK_DIR / "asia.bif"


@pytest.fixture
def asia(asia_path: Path) -> BayesNet:
    """Parsed Asia network (8 nodes, 8 edges)."""
    return load_bif(asia_path)


@pytest.fixture
def copy_net() -> BayesNet:
    """Two binary variables where B is a noisy copy of A (A -> B)."""
    variables = VariableSet.binary(["A", "B"])
    dag = Dag.from_edges(variables, [(0, 1)])
    return BayesNet(
        dag=dag,
        cpts=(
            Cpt(0, (), np.array([[0.5, 0.5]])),
            Cpt(1, (0,), np.array([[0.9, 0.1], [0.1, 0.9]])),
        ),
        name="copy",
    )


@pytest.fixture
def collider_net() -> BayesNet:
    """Binary collider A -> C <- B with C close to A xor B."""
    variables = VariableSet.binary(["A", "B", "C"])
    dag = Dag.from_edges(variables, [(0, 2), (1, 2)])
    return BayesNet(
        dag=dag,
        cpts=(
            Cpt(0, (), np.array([[0.5, 0.5]])),
            Cpt(1, (), np.array([[0.5, 0.5]])),
            Cpt(2, (0, 1), np.array([[0.9, 0.1], [0.1, 0.9], [0.1, 0.9], [0.9, 0.1]])),
        ),
        name="collider",
    )


@pytest.fixture
def tiny_dataset(abc: VariableSet) -> Dataset:
    """Hand-written 6-row dataset over A, B, C."""
    return Dataset.from_columns(
        abc,
        [
            [0, 0, 1, 1, 1, 0],
            [0, 1, 1, 1, 0, 0],
            [1, 1, 0, 1, 0, 0],
        ],
    )
