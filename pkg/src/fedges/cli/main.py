"""Command-line experiment driver.

Run with: fedges <command> [options]

Commands:
    sample   Draw CSV datasets from a BIF network
    run      Run a federated (or one-shot baseline) experiment and write a report
    eval     Compare a learned graph file with a network
    summary  Print size figures of one or more networks
    export   Write a network's DAG in the edge-list format
"""

import argparse
import logging
import sys
import time
from collections.abc import Sequence
from dataclasses import asdict
from pathlib import Path
from typing import NoReturn

import polars as pl
from pydantic import ValidationError

from fedges import __version__
from fedges.cli.report import (
    SampleOutcome,
    append_summary,
    build_report,
    summary_row,
    write_report,
)
from fedges.cli.spec import ExperimentSpec
from fedges.config import DEFAULT_EDGE_LIMIT, DEFAULT_MAX_ROUNDS, Settings
from fedges.exceptions import DataError, FedgesError, InvariantViolation, UsageError
from fedges.federation.runner import run_fedges, run_oneshot_baseline
from fedges.graph.io import read_graph, write_graph
from fedges.ingest.bif import load_bif
from fedges.ingest.dataset import Dataset
from fedges.ingest.loaders import load_dataset, load_domain, save_dataset, save_domain
from fedges.ingest.network import BayesNet
from fedges.ingest.sampling import forward_sample, partition_horizontal
from fedges.ingest.validators import validate_dataset_against, validate_network
from fedges.metrics.smhd import EvalResult, evaluate, network_summary

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INVARIANT = 3


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports bad arguments as UsageError."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def dataset_path(outdir: Path, network: str, index: int) -> Path:
    """File name of the ``index``-th sampled dataset of a network."""
    return outdir / f"{network}_s{index}.csv"


def domain_path(outdir: Path, network: str) -> Path:
    """File name of a network's domain metadata file."""
    return outdir / f"{network}.domain"


def _load_network(path: Path) -> BayesNet:
    net = load_bif(path)
    result = validate_network(net)
    if not result.is_valid:
        raise DataError(result.message)
    logger.info(result.message)
    return net


def cmd_sample(
    network: Path, m: int, count: int, seed: int, outdir: Path
) -> list[Path]:
    """Write ``count`` sampled datasets of ``m`` rows plus a domain file.

    Sample ``i`` uses seed ``seed + i``.

    Returns:
        Paths of the dataset files in sample order.
    """
    if m < 0 or count < 1:
        raise UsageError(f"Need rows >= 0 and samples >= 1, got {m} and {count}")
    net = _load_network(network)
    outdir.mkdir(parents=True, exist_ok=True)
    save_domain(net.variables, domain_path(outdir, network.stem))

    paths = []
    for index in range(count):
        dataset = forward_sample(net, m, seed + index)
        path = dataset_path(outdir, network.stem, index)
        save_dataset(dataset, path)
        paths.append(path)
    logger.info(f"Wrote {count} datasets of {m} rows to {outdir}")
    return paths


def _sample_dataset(spec: ExperimentSpec, net: BayesNet, index: int) -> Dataset:
    if spec.data_dir is None:
        return forward_sample(net, spec.rows, spec.sample_seed(index))

    data_dir = Path(spec.data_dir)
    stem = Path(spec.network).stem
    domain_file = domain_path(data_dir, stem)
    variables = load_domain(domain_file) if domain_file.exists() else net.variables
    dataset = load_dataset(dataset_path(data_dir, stem, index), variables)
    check = validate_dataset_against(net, dataset)
    if not check.is_valid:
        raise DataError(check.message)
    for warning in check.warnings:
        logger.debug(warning)
    return dataset


def cmd_run(spec: ExperimentSpec) -> Path:
    """Run every sample of an experiment and write its report.

    Each sample is partitioned across the clients, learned with the
    federated loop (or the one-shot baseline) and evaluated against the
    network. The final DAG of each sample is written next to the report
    and the summary table ``summary.csv`` in the same directory is updated.

    Returns:
        Path of the JSON report.
    """
    network_path = Path(spec.network)
    net = _load_network(network_path)
    out = Path(spec.out)
    out.parent.mkdir(parents=True, exist_ok=True)

    outcomes: list[SampleOutcome] = []
    for index in range(spec.samples):
        seed = spec.sample_seed(index)
        dataset = _sample_dataset(spec, net, index)
        parts = partition_horizontal(dataset, spec.clients, seed, shuffle=spec.shuffle)

        started = time.perf_counter()
        if spec.baseline == "oneshot-ges":
            baseline = run_oneshot_baseline(parts, spec.ess, spec.threads)
            dag, cpu_per_client = baseline.dag, baseline.cpu_time_per_client
            converged, rounds = None, []
        else:
            result = run_fedges(spec.federation_config(index), parts, truth=net.dag)
            dag, converged, rounds = result.dag, result.converged, result.rounds
            cpu_per_client = result.cpu_time_per_client
        elapsed = time.perf_counter() - started

        graph_path = out.with_name(f"{out.stem}_s{index}.txt")
        write_graph(graph_path, dag)
        evaluation = evaluate(dag, net)
        outcomes.append(
            SampleOutcome(
                index=index,
                seed=seed,
                client_rows=[p.m for p in parts],
                final_edges=dag.edge_count,
                evaluation=evaluation,
                converged=converged,
                rounds=rounds,
                graph_path=graph_path.name,
                wall_time=elapsed,
                cpu_time_per_client=cpu_per_client,
            )
        )
        logger.info(
            f"Sample {index}: {dag.edge_count} edges, SMHD {evaluation.smhd} "
            f"({elapsed:.1f}s)"
        )

    report = build_report(spec, network_summary(net), outcomes, __version__)
    write_report(report, out)
    append_summary(
        summary_row(spec, network_path.stem, report), out.with_name("summary.csv")
    )
    return out


def cmd_eval(graph: Path, network: Path) -> EvalResult:
    """Compare a learned graph file with a network."""
    net = load_bif(network)
    learned = read_graph(graph, net.variables)
    return evaluate(learned, net)


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per operation."""
    parser = _Parser(
        prog="fedges", description="Federated Bayesian network structure learning"
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    sample = commands.add_parser("sample", help="Draw CSV datasets from a network")
    sample.add_argument("--network", required=True, help="BIF path or bundled name")
    sample.add_argument("--rows", type=int, default=5000)
    sample.add_argument("--samples", type=int, default=10)
    sample.add_argument("--seed", type=int, default=0)
    sample.add_argument("--out", help="Output directory (default FEDGES_OUTPUT_DIR)")

    run = commands.add_parser("run", help="Run an experiment")
    run.add_argument("--network", required=True, help="BIF path or bundled name")
    run.add_argument("--samples", type=int, default=10)
    run.add_argument("--rows", type=int, default=5000)
    run.add_argument("--clients", type=int, default=5)
    run.add_argument("--limit", type=int, default=DEFAULT_EDGE_LIMIT)
    run.add_argument("--max-rounds", type=int, default=DEFAULT_MAX_ROUNDS)
    run.add_argument(
        "--fusion-server", choices=["union", "c25", "c50"], default="union"
    )
    run.add_argument(
        "--fusion-client", choices=["overwrite", "fuse"], default="overwrite"
    )
    run.add_argument("--baseline", choices=["oneshot-ges"], default=None)
    run.add_argument(
        "--convergence", choices=["history", "unchanged"], default="history"
    )
    run.add_argument("--ess", type=float, default=None)
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--threads", type=int, default=None)
    run.add_argument("--data-dir", default=None, help="Reuse datasets from 'sample'")
    run.add_argument("--no-shuffle", action="store_true", help="Deal rows in order")
    run.add_argument("--out", default=None, help="Report path (.json)")

    ev = commands.add_parser("eval", help="Compare a graph file with a network")
    ev.add_argument("--graph", required=True)
    ev.add_argument("--network", required=True)

    summary = commands.add_parser("summary", help="Print network size figures")
    summary.add_argument("--network", required=True, nargs="+")
    summary.add_argument("--out", default=None, help="Also write a CSV table")

    export = commands.add_parser("export", help="Write a network's DAG")
    export.add_argument("--network", required=True)
    export.add_argument("--out", required=True)
    return parser


def _spec_from_args(args: argparse.Namespace, settings: Settings) -> ExperimentSpec:
    network = settings.resolve_network(args.network)
    fusion = args.baseline or args.fusion_server
    default_out = settings.output_dir / f"{network.stem}_k{args.clients}_{fusion}.json"
    try:
        return ExperimentSpec(
            network=str(network),
            samples=args.samples,
            rows=args.rows,
            clients=args.clients,
            limit=args.limit,
            max_rounds=args.max_rounds,
            fusion_server=args.fusion_server,
            fusion_client=args.fusion_client,
            baseline=args.baseline,
            convergence=args.convergence,
            ess=args.ess if args.ess is not None else settings.ess,
            seed=args.seed,
            threads=args.threads if args.threads is not None else settings.threads,
            shuffle=not args.no_shuffle,
            data_dir=args.data_dir,
            out=str(args.out or default_out),
        )
    except ValidationError as e:
        raise UsageError(f"Invalid experiment: {e}") from e


def _dispatch(args: argparse.Namespace, settings: Settings) -> None:
    if args.command == "sample":
        outdir = Path(args.out) if args.out else settings.output_dir
        paths = cmd_sample(
            settings.resolve_network(args.network),
            args.rows,
            args.samples,
            args.seed,
            outdir,
        )
        print(f"Wrote {len(paths)} datasets to {outdir}")

    elif args.command == "run":
        settings.ensure_directories()
        report = cmd_run(_spec_from_args(args, settings))
        print(f"Report written to {report}")

    elif args.command == "eval":
        result = cmd_eval(Path(args.graph), settings.resolve_network(args.network))
        print(f"SMHD: {result.smhd}")
        print(f"  missing moral edges: {result.missing}")
        print(f"  extra moral edges:   {result.extra}")
        print(f"  learned edges: {result.learned_edges}")
        print(f"  true edges:    {result.true_edges}")

    elif args.command == "summary":
        rows = [
            network_summary(load_bif(settings.resolve_network(name)))
            for name in args.network
        ]
        table = pl.DataFrame([asdict(row) for row in rows])
        print(table)
        if args.out:
            table.write_csv(args.out)

    elif args.command == "export":
        net = load_bif(settings.resolve_network(args.network))
        write_graph(args.out, net.dag)
        print(f"Wrote {net.dag.edge_count} edges to {args.out}")


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point; returns the process exit code."""
    try:
        settings = Settings.from_env()
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=settings.log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )

    try:
        args = build_parser().parse_args(argv)
        _dispatch(args, settings)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as e:
        logger.exception("Internal invariant violated")
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    except (FedgesError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
