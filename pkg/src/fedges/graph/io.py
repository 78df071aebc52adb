"""Plain-text edge-list format for learned graphs.

    # vars A,B,C
    A -> B
    B -> C

Edges are written in canonical (tail index, head index) order, so files are
diffable and hashable.
"""

import logging
from pathlib import Path

from fedges.exceptions import CycleError, DataError
from fedges.graph.dag import Dag
from fedges.models import VariableSet

logger = logging.getLogger(__name__)

HEADER_PREFIX = "# vars"
ARROW = "->"


def render_edge_list(g: Dag) -> str:
    """Serialize a DAG to the edge-list text format."""
    names = g.variables.names
    lines = [f"{HEADER_PREFIX} {','.join(names)}"]
    lines.extend(f"{names[t]} {ARROW} {names[h]}" for t, h in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, variables: VariableSet) -> Dag:
    """Parse the edge-list format against a known VariableSet.

    Raises:
        DataError: If the header is missing or names differ from ``variables``,
            a line is malformed, or the edges form a cycle.
    """
    declared = header_names(text)
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if declared != variables.names:
        raise DataError(
            f"Graph variables {declared} do not match network variables "
            f"{variables.names}"
        )

    edges: list[tuple[str, str]] = []
    for number, line in enumerate(lines[1:], start=2):
        if line.startswith("#"):
            continue
        parts = [part.strip() for part in line.split(ARROW)]
        if len(parts) != 2 or not all(parts):
            raise DataError(f"Malformed edge on line {number}: {line!r}")
        tail, head = parts
        for name in (tail, head):
            if name not in variables:
                raise DataError(f"Unknown variable {name!r} on line {number}")
        edges.append((tail, head))

    try:
        return Dag.from_named_edges(variables, edges)
    except (ValueError, CycleError) as e:
        raise DataError(f"Graph file does not describe a DAG: {e}") from e


def write_graph(path: Path | str, g: Dag) -> None:
    """Write a DAG to ``path`` in the edge-list format."""
    path = Path(path)
    path.write_text(render_edge_list(g), encoding="utf-8")
    logger.info(f"Wrote graph with {g.edge_count} edges to {path}")


def read_graph(path: Path | str, variables: VariableSet) -> Dag:
    """Read a DAG from an edge-list file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DataError(f"Cannot read graph file {path}: {e}") from e
    g = parse_edge_list(text, variables)
    logger.info(f"Loaded graph with {g.edge_count} edges from {path}")
    return g


def header_names(text: str) -> list[str]:
    """Variable names declared by an edge-list header.

    Raises:
        DataError: If the first non-blank line is not a header.
    """
    first = next((line.strip() for line in text.splitlines() if line.strip()), "")
    if not first.startswith(HEADER_PREFIX):
        raise DataError(f"Graph file must start with '{HEADER_PREFIX}' header")
    names = [name.strip() for name in first[len(HEADER_PREFIX) :].split(",")]
    return [name for name in names if name]


def read_structure(path: Path | str) -> Dag:
    """Read a structure-only network over binary stand-in variables.

    Used for networks whose structure is known but whose CPTs are not
    available; only structural figures (edges, moral graph, SMHD) are
    meaningful for the result.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DataError(f"Cannot read graph file {path}: {e}") from e
    try:
        variables = VariableSet.binary(header_names(text))
    except ValueError as e:
        raise DataError(f"Bad variable list in {path}: {e}") from e
    g = parse_edge_list(text, variables)
    logger.info(f"Loaded structure {path.stem}: {g.n} nodes, {g.edge_count} edges")
    return g
