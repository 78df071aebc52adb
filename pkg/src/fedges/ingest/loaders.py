"""File loading utilities for categorical datasets and domain metadata."""

import logging
from pathlib import Path

import numpy as np
import polars as pl

from fedges.exceptions import DataError
from fedges.ingest.dataset import Dataset
from fedges.models import VariableSet

logger = logging.getLogger(__name__)

DOMAIN_SEPARATOR = ":"
LABEL_SEPARATOR = ","


def load_domain(path: Path | str) -> VariableSet:
    """Load a domain metadata file.

    One line per variable, ``name:label1,label2,...``. Blank lines are ignored.

    Args:
        path: Domain file path.

    Returns:
        VariableSet in file order.

    Raises:
        DataError: If a line is malformed or a domain is invalid.
    """
    path = Path(path)
    logger.info(f"Loading domain file: {path}")
    domains: list[tuple[str, list[str]]] = []
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DataError(f"Cannot read domain file {path}: {e}") from e

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        name, sep, labels = line.partition(DOMAIN_SEPARATOR)
        if not sep or not name.strip():
            raise DataError(f"{path}:{lineno}: expected 'name:label1,label2,...'")
        domains.append(
            (name.strip(), [label.strip() for label in labels.split(LABEL_SEPARATOR)])
        )

    try:
        variables = VariableSet.from_domains(domains)
    except ValueError as e:
        raise DataError(f"Invalid domain file {path}: {e}") from e
    logger.info(f"Loaded domains for {len(variables)} variables")
    return variables


def save_domain(variables: VariableSet, path: Path | str) -> None:
    """Write a VariableSet in the domain metadata format."""
    lines = [
        f"{var.name}{DOMAIN_SEPARATOR}{LABEL_SEPARATOR.join(var.categories)}"
        for var in variables
    ]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _infer_variables(df: pl.DataFrame) -> VariableSet:
    """Infer domains from observed labels, sorted per column."""
    domains = []
    for name in df.columns:
        labels = sorted(df[name].unique().to_list())
        domains.append((name, labels))
    try:
        return VariableSet.from_domains(domains)
    except ValueError as e:
        raise DataError(f"Cannot infer domains from data: {e}") from e


def load_dataset(path: Path | str, variables: VariableSet | None = None) -> Dataset:
    """Load a CSV dataset of category labels.

    Every cell is read as a string. With ``variables`` given, the header
    must name exactly those variables (columns are reordered to match) and
    every label must belong to its variable's domain. Without it, domains
    are inferred from the observed labels.

    Args:
        path: CSV path with a header row of variable names.
        variables: Shared domain metadata, normally from a domain file.

    Returns:
        Dataset over ``variables`` (or the inferred VariableSet).

    Raises:
        DataError: If the file is unreadable, ragged, has missing cells,
            mismatched columns, or a label outside the declared domain.
    """
    path = Path(path)
    logger.info(f"Loading dataset CSV: {path}")

    try:
        df = pl.read_csv(path, infer_schema_length=0, encoding="utf8")
    except (pl.exceptions.PolarsError, OSError) as e:
        logger.error(f"Failed to load CSV file: {e}")
        raise DataError(f"Cannot parse CSV file {path}: {e}") from e

    # Short rows come back as nulls
    for name in df.columns:
        nulls = df[name].is_null()
        if nulls.any():
            row = int(nulls.arg_true()[0]) + 1
            raise DataError(f"{path}: missing value at row {row}, column {name!r}")

    if variables is None:
        variables = _infer_variables(df)
    else:
        missing = [n for n in variables.names if n not in df.columns]
        extra = [c for c in df.columns if c not in variables]
        if missing or extra:
            raise DataError(
                f"{path}: header does not match the domain "
                f"(missing {missing}, unexpected {extra})"
            )
        df = df.select(variables.names)

    codes = np.empty((df.height, len(variables)), dtype=np.int64, order="F")
    for var in variables:
        column = df[var.name]
        unknown = ~column.is_in(list(var.categories))
        if unknown.any():
            row = int(unknown.arg_true()[0])
            raise DataError(
                f"{path}: label {column[row]!r} at row {row + 1}, column "
                f"{var.name!r} is not in the domain {list(var.categories)}"
            )
        codes[:, var.index] = column.replace_strict(
            list(var.categories),
            list(range(var.cardinality)),
            return_dtype=pl.Int64,
        ).to_numpy()

    logger.info(f"Loaded {df.height} rows, {len(variables)} variables")
    return Dataset(variables, codes)


def save_dataset(dataset: Dataset, path: Path | str) -> None:
    """Write a dataset as CSV with a header row and category labels."""
    path = Path(path)
    frame = pl.DataFrame(
        {
            var.name: np.asarray(var.categories, dtype=object)[
                dataset.column(var.index)
            ].tolist()
            for var in dataset.variables
        },
        schema={var.name: pl.String for var in dataset.variables},
    )
    frame.write_csv(path)
    logger.info(f"Saved {dataset.m} rows to {path}")
