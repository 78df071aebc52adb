"""Structural evaluation against ground-truth networks."""

import logging
from dataclasses import dataclass

from fedges.graph.dag import Dag, moralize
from fedges.ingest.network import BayesNet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EvalResult:
    """Comparison of a learned DAG with the true network.

    Attributes:
        smhd: Moral edges in exactly one of the two graphs.
        learned_edges: Edge count of the learned DAG.
        true_edges: Edge count of the true DAG.
        missing: Moral edges of the truth absent from the learned graph.
        extra: Moral edges of the learned graph absent from the truth.
    """

    smhd: int
    learned_edges: int
    true_edges: int
    missing: int
    extra: int


@dataclass(frozen=True)
class NetworkSummary:
    """Size figures of a benchmark network.

    Attributes:
        name: Network name.
        nodes: Number of variables.
        edges: Number of arcs.
        parameters: Free parameters, sum of (r_i - 1) * q_i.
        max_parents: Largest parent-set size.
        empty_smhd: SMHD between the empty graph and the network.
    """

    name: str
    nodes: int
    edges: int
    parameters: int
    max_parents: int
    empty_smhd: int


def _check_same_variables(a: Dag, b: Dag) -> None:
    if a.variables != b.variables:
        raise ValueError("Graphs are defined over different variables")


def smhd(a: Dag, b: Dag) -> int:
    """Structural moralized Hamming distance.

    Raises:
        ValueError: If the graphs use different variables.
    """
    _check_same_variables(a, b)
    return len(moralize(a).edges ^ moralize(b).edges)


def evaluate(learned: Dag, truth: BayesNet) -> EvalResult:
    """Compare a learned DAG with a ground-truth network.

    Raises:
        ValueError: If the variables differ.
    """
    _check_same_variables(learned, truth.dag)
    learned_moral = moralize(learned).edges
    true_moral = moralize(truth.dag).edges
    missing = len(true_moral - learned_moral)
    extra = len(learned_moral - true_moral)
    return EvalResult(
        smhd=missing + extra,
        learned_edges=learned.edge_count,
        true_edges=truth.dag.edge_count,
        missing=missing,
        extra=extra,
    )


def network_summary(net: BayesNet) -> NetworkSummary:
    """Nodes, edges, parameters, max parents and empty-graph SMHD."""
    return NetworkSummary(
        name=net.name,
        nodes=net.dag.n,
        edges=net.dag.edge_count,
        parameters=net.parameter_count,
        max_parents=net.dag.max_parents,
        empty_smhd=moralize(net.dag).edge_count,
    )
