"""Error hierarchy for fedges.

Each family maps onto one CLI exit code (see ``fedges.cli.main``).
"""


class FedgesError(Exception):
    """Base class for all fedges errors."""


class UsageError(FedgesError, ValueError):
    """Invalid configuration or arguments (exit code 1)."""


class DataError(FedgesError, ValueError):
    """Malformed data, CSV, domain or graph file (exit code 2)."""


class BifParseError(DataError):
    """BIF document could not be parsed.

    Attributes:
        line: 1-based line of the offending token.
        column: 1-based column of the offending token.
    """

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{message} (line {line}, column {column})")
        self.reason = message
        self.line = line
        self.column = column


class NoExtensionError(FedgesError, ValueError):
    """A PDAG admits no consistent DAG extension."""


class InvariantViolation(FedgesError, RuntimeError):
    """An internal invariant was broken (exit code 3)."""


class CycleError(InvariantViolation):
    """A graph expected to be acyclic contains a directed cycle."""
