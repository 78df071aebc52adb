"""Shared data models for fedges."""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum


class FusionKind(str, Enum):
    """Edge aggregation rule applied after transforming DAGs to a common order."""

    UNION = "union"
    CONSENSUS = "consensus"


class ClientFusion(str, Enum):
    """How a client combines its previous DAG with the incoming global DAG."""

    OVERWRITE = "overwrite"
    FUSE = "fuse"


class ConvergenceMode(str, Enum):
    """Stopping criterion for the federated loop."""

    HISTORY = "history"  # any earlier client-DAG tuple recurs
    UNCHANGED = "unchanged"  # tuple equals the previous round's


class SearchPhase(str, Enum):
    """Phase of greedy equivalence search that produced an operator."""

    FORWARD = "FES"
    BACKWARD = "BES"


@dataclass(frozen=True)
class Variable:
    """A discrete problem-domain variable.

    Attributes:
        name: Variable name, unique within its VariableSet.
        index: 0-based position within its VariableSet.
        categories: Ordered category labels; codes are positions in this tuple.
    """

    name: str
    index: int
    categories: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.categories) < 2:
            raise ValueError(
                f"Variable {self.name!r} needs at least 2 categories, "
                f"got {len(self.categories)}"
            )
        if len(set(self.categories)) != len(self.categories):
            raise ValueError(f"Variable {self.name!r} has duplicate categories")

    @property
    def cardinality(self) -> int:
        """Number of categories (r_i)."""
        return len(self.categories)

    def code_of(self, label: str) -> int:
        """Return the integer code of a category label.

        Raises:
            ValueError: If the label is not a category of this variable.
        """
        try:
            return self.categories.index(label)
        except ValueError as e:
            raise ValueError(
                f"Label {label!r} is not in the domain of {self.name!r}"
            ) from e


@dataclass(frozen=True)
class VariableSet:
    """Ordered collection of variables shared by graphs and datasets.

    Attributes:
        variables: Variables in index order.
    """

    variables: tuple[Variable, ...]
    _by_name: dict[str, int] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        by_name: dict[str, int] = {}
        for position, var in enumerate(self.variables):
            if var.index != position:
                raise ValueError(
                    f"Variable {var.name!r} has index {var.index}, expected {position}"
                )
            if var.name in by_name:
                raise ValueError(f"Duplicate variable name {var.name!r}")
            by_name[var.name] = position
        object.__setattr__(self, "_by_name", by_name)

    @classmethod
    def from_domains(
        cls, domains: Iterable[tuple[str, Sequence[str]]]
    ) -> "VariableSet":
        """Build a VariableSet from ``(name, categories)`` pairs in order."""
        return cls(
            tuple(
                Variable(name=name, index=i, categories=tuple(categories))
                for i, (name, categories) in enumerate(domains)
            )
        )

    @classmethod
    def binary(cls, names: Sequence[str]) -> "VariableSet":
        """Build a VariableSet of binary variables with categories ("0", "1")."""
        return cls.from_domains((name, ("0", "1")) for name in names)

    def __len__(self) -> int:
        return len(self.variables)

    def __iter__(self) -> Iterator[Variable]:
        return iter(self.variables)

    def __getitem__(self, index: int) -> Variable:
        return self.variables[index]

    @property
    def names(self) -> list[str]:
        """Variable names in index order."""
        return [var.name for var in self.variables]

    @property
    def cardinalities(self) -> list[int]:
        """Category counts in index order."""
        return [var.cardinality for var in self.variables]

    def index_of(self, name: str) -> int:
        """Return the index of a variable by name.

        Raises:
            KeyError: If no variable has this name.
        """
        try:
            return self._by_name[name]
        except KeyError as e:
            raise KeyError(f"Unknown variable {name!r}") from e

    def __contains__(self, name: object) -> bool:
        return name in self._by_name
