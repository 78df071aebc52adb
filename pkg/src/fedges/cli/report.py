"""JSON experiment reports and the summary table."""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import orjson
import polars as pl

from fedges.cli.spec import ExperimentSpec
from fedges.federation.runner import RoundReport
from fedges.metrics.smhd import EvalResult, NetworkSummary

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = [
    "network",
    "clients",
    "fusion",
    "mean_edges",
    "mean_smhd",
    "mean_client_cpu_time",
]


@dataclass
class SampleOutcome:
    """Result of one sample of an experiment.

    Attributes:
        index: Sample index.
        seed: Seed used for sampling and partitioning.
        client_rows: Rows held by each client.
        final_edges: Edge count of the final server DAG.
        evaluation: Comparison of the final DAG with the truth.
        converged: Whether the federated loop converged (None for baselines).
        rounds: Per-round reports (empty for baselines).
        graph_path: Where the final DAG was written.
        wall_time: Seconds spent learning.
        cpu_time_per_client: Client plus server CPU seconds divided by the
            number of clients.
    """

    index: int
    seed: int
    client_rows: list[int]
    final_edges: int
    evaluation: EvalResult
    converged: bool | None = None
    rounds: list[RoundReport] = field(default_factory=list)
    graph_path: str | None = None
    wall_time: float = 0.0
    cpu_time_per_client: float = 0.0


def build_report(
    spec: ExperimentSpec,
    network: NetworkSummary,
    outcomes: list[SampleOutcome],
    version: str,
) -> dict[str, Any]:
    """Assemble the report document in sample order."""
    edges = [o.final_edges for o in outcomes]
    distances = [o.evaluation.smhd for o in outcomes]
    cpu = [o.cpu_time_per_client for o in outcomes]
    return {
        "version": version,
        "spec": spec.model_dump(mode="json"),
        "network": network,
        "samples": outcomes,
        "summary": {
            "mean_edges": sum(edges) / len(edges) if edges else None,
            "mean_smhd": sum(distances) / len(distances) if distances else None,
            "mean_client_cpu_time": sum(cpu) / len(cpu) if cpu else None,
        },
    }


def write_report(report: dict[str, Any], path: Path | str) -> Path:
    """Write a report as indented JSON with sorted keys."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(
        orjson.dumps(report, option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS)
    )
    logger.info(f"Wrote report to {path}")
    return path


def summary_row(
    spec: ExperimentSpec, network: str, report: dict[str, Any]
) -> pl.DataFrame:
    """One summary-table row for a finished experiment."""
    return pl.DataFrame(
        {
            "network": [network],
            "clients": [spec.clients],
            "fusion": [spec.fusion_label],
            "mean_edges": [report["summary"]["mean_edges"]],
            "mean_smhd": [report["summary"]["mean_smhd"]],
            "mean_client_cpu_time": [report["summary"]["mean_client_cpu_time"]],
        },
        schema={
            "network": pl.String,
            "clients": pl.Int64,
            "fusion": pl.String,
            "mean_edges": pl.Float64,
            "mean_smhd": pl.Float64,
            "mean_client_cpu_time": pl.Float64,
        },
    )


def append_summary(row: pl.DataFrame, path: Path | str) -> pl.DataFrame:
    """Append a row to the summary CSV, replacing an earlier row for the same cell.

    Returns:
        The full summary table as written.
    """
    path = Path(path)
    table = row
    if path.exists():
        try:
            existing = pl.read_csv(path, schema=row.schema)
        except pl.exceptions.PolarsError as e:
            raise ValueError(f"Cannot read summary table {path}: {e}") from e
        keys = ["network", "clients", "fusion"]
        table = pl.concat([existing.join(row, on=keys, how="anti"), row])
    table = table.sort(["network", "clients", "fusion"])
    table.write_csv(path)
    logger.info(f"Updated summary table {path} ({table.height} rows)")
    return table
