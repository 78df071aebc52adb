"""Categorical datasets shared by clients and the scorer."""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from fedges.models import VariableSet

Codes = npt.NDArray[np.int64]


@dataclass(frozen=True, eq=False)
class Dataset:
    """Column-major matrix of category codes.

    Attributes:
        variables: Shared variable metadata (domains come from the network).
        codes: Array of shape (m, n) in Fortran order; column j holds codes
            in ``0..cardinality(j) - 1``.
    """

    variables: VariableSet
    codes: Codes

    def __post_init__(self) -> None:
        if self.codes.ndim != 2 or self.codes.shape[1] != len(self.variables):
            raise ValueError(
                f"Codes must have shape (m, {len(self.variables)}), "
                f"got {self.codes.shape}"
            )
        codes = np.asfortranarray(self.codes, dtype=np.int64)
        codes.setflags(write=False)
        object.__setattr__(self, "codes", codes)
        if codes.shape[0]:
            cards = np.asarray(self.variables.cardinalities)
            if codes.min() < 0 or np.any(codes.max(axis=0) >= cards):
                raise ValueError("Codes fall outside the variable domains")

    @classmethod
    def from_columns(
        cls, variables: VariableSet, columns: Sequence[Sequence[int]]
    ) -> "Dataset":
        """Build a dataset from one code vector per variable."""
        m = len(columns[0]) if columns else 0
        if any(len(col) != m for col in columns):
            raise ValueError("All columns must have the same length")
        codes = np.empty((m, len(variables)), dtype=np.int64, order="F")
        for j, col in enumerate(columns):
            codes[:, j] = col
        return cls(variables, codes)

    @classmethod
    def empty(cls, variables: VariableSet) -> "Dataset":
        """Dataset with zero rows."""
        return cls(variables, np.zeros((0, len(variables)), dtype=np.int64))

    @property
    def m(self) -> int:
        """Number of rows."""
        return int(self.codes.shape[0])

    def column(self, index: int) -> Codes:
        """Code vector of one variable."""
        return self.codes[:, index]

    def take(self, rows: npt.NDArray[np.intp]) -> "Dataset":
        """Dataset with the selected rows, sharing this VariableSet."""
        return Dataset(self.variables, self.codes[rows, :])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        return self.variables == other.variables and bool(
            np.array_equal(self.codes, other.codes)
        )

    __hash__ = None  # type: ignore[assignment]
