"""Tests for datasets and the CSV / domain file loaders."""

from pathlib import Path

import numpy as np
import pytest

from fedges.exceptions import DataError
from fedges.ingest import (
    Dataset,
    load_dataset,
    load_domain,
    save_dataset,
    save_domain,
)
from fedges.models import VariableSet


class TestDataset:
    """Tests for the in-memory code matrix."""

    def test_from_columns(self, tiny_dataset: Dataset) -> None:
        """Columns map onto variables by position."""
        assert tiny_dataset.m == 6
        assert tiny_dataset.column(2).tolist() == [1, 1, 0, 1, 0, 0]
        assert tiny_dataset.codes.flags["F_CONTIGUOUS"]

    def test_codes_are_read_only(self, tiny_dataset: Dataset) -> None:
        """The code matrix cannot be modified in place."""
        with pytest.raises(ValueError):
            tiny_dataset.codes[0, 0] = 1

    def test_out_of_domain_code(self, abc: VariableSet) -> None:
        """Codes must lie inside each variable's domain."""
        with pytest.raises(ValueError, match="outside"):
            Dataset.from_columns(abc, [[0, 2], [0, 1], [1, 1]])

    def test_ragged_columns(self, abc: VariableSet) -> None:
        """Columns must have equal length."""
        with pytest.raises(ValueError, match="same length"):
            Dataset.from_columns(abc, [[0, 1], [0], [1, 1]])

    def test_wrong_width(self, abc: VariableSet) -> None:
        """The matrix needs one column per variable."""
        with pytest.raises(ValueError, match="shape"):
            Dataset(abc, np.zeros((3, 2), dtype=np.int64))

    def test_empty(self, abc: VariableSet) -> None:
        """An empty dataset has zero rows."""
        assert Dataset.empty(abc).m == 0

    def test_take(self, tiny_dataset: Dataset) -> None:
        """take selects rows and keeps the variables."""
        part = tiny_dataset.take(np.array([0, 5]))

        assert part.m == 2
        assert part.variables is tiny_dataset.variables
        assert part.column(0).tolist() == [0, 0]

    def test_equality(self, tiny_dataset: Dataset) -> None:
        """Datasets compare by variables and codes."""
        same = Dataset(tiny_dataset.variables, np.array(tiny_dataset.codes))
        assert same == tiny_dataset
        assert tiny_dataset.take(np.array([0])) != tiny_dataset


class TestDomainFiles:
    """Tests for domain metadata files."""

    def test_load(self, tmp_path: Path) -> None:
        """Each line declares a variable; blank lines are skipped."""
        path = tmp_path / "net.domain"
        path.write_text("A:0,1\n\nB: low , mid , high\n")
        variables = load_domain(path)

        assert variables.names == ["A", "B"]
        assert variables[1].categories == ("low", "mid", "high")

    def test_save_then_load(self, tmp_path: Path) -> None:
        """A saved domain file loads back to the same variables."""
        variables = VariableSet.from_domains(
            [("X", ["a", "b", "c"]), ("Y", ["0", "1"])]
        )
        path = tmp_path / "x.domain"
        save_domain(variables, path)

        assert load_domain(path) == variables

    @pytest.mark.parametrize(
        ("text", "message"),
        [
            ("A\n", "expected 'name:label1"),
            (":0,1\n", "expected 'name:label1"),
            ("A:0\n", "Invalid domain"),
            ("A:0,1\nA:0,1\n", "Invalid domain"),
        ],
    )
    def test_malformed(self, tmp_path: Path, text: str, message: str) -> None:
        """Malformed lines and invalid domains raise DataError."""
        path = tmp_path / "bad.domain"
        path.write_text(text)
        with pytest.raises(DataError, match=message):
            load_domain(path)

    def test_missing_file(self, tmp_path: Path) -> None:
        """An unreadable domain file is a DataError."""
        with pytest.raises(DataError, match="Cannot read domain file"):
            load_domain(tmp_path / "absent.domain")


class TestLoadDataset:
    """Tests for loading CSV datasets."""

    def test_with_declared_domain(self, tmp_path: Path) -> None:
        """Labels map to codes by the declared category order."""
        variables = VariableSet.from_domains([("A", ["yes", "no"]), ("B", ["x", "y"])])
        path = tmp_path / "d.csv"
        path.write_text("A,B\nno,x\nyes,y\nno,y\n")
        dataset = load_dataset(path, variables)

        assert dataset.variables is variables
        assert dataset.column(0).tolist() == [1, 0, 1]
        assert dataset.column(1).tolist() == [0, 1, 1]

    def test_columns_reordered(self, tmp_path: Path, abc: VariableSet) -> None:
        """CSV column order does not need to match the domain order."""
        path = tmp_path / "d.csv"
        path.write_text("C,A,B\n1,0,0\n0,1,1\n")
        dataset = load_dataset(path, abc)

        assert dataset.column(0).tolist() == [0, 1]
        assert dataset.column(2).tolist() == [1, 0]

    def test_inferred_domain_is_sorted(self, tmp_path: Path) -> None:
        """Without a domain, categories are the sorted observed labels."""
        path = tmp_path / "d.csv"
        path.write_text("S,T\nyes,b\nno,a\nyes,c\n")
        dataset = load_dataset(path)

        assert dataset.variables[0].categories == ("no", "yes")
        assert dataset.variables[1].categories == ("a", "b", "c")
        assert dataset.column(0).tolist() == [1, 0, 1]

    def test_missing_value(self, tmp_path: Path, abc: VariableSet) -> None:
        """An empty cell is reported with its row and column."""
        path = tmp_path / "d.csv"
        path.write_text("A,B,C\n0,1,1\n1,,0\n")
        with pytest.raises(DataError, match="missing value at row 2, column 'B'"):
            load_dataset(path, abc)

    def test_label_outside_domain(self, tmp_path: Path, abc: VariableSet) -> None:
        """Unknown labels are reported with their position."""
        path = tmp_path / "d.csv"
        path.write_text("A,B,C\n0,1,1\n1,0,2\n")
        with pytest.raises(DataError, match="label '2' at row 2, column 'C'"):
            load_dataset(path, abc)

    def test_header_mismatch(self, tmp_path: Path, abc: VariableSet) -> None:
        """Missing or unexpected columns are reported."""
        path = tmp_path / "d.csv"
        path.write_text("A,B,D\n0,1,1\n")
        with pytest.raises(DataError, match="header does not match"):
            load_dataset(path, abc)

    def test_single_label_column_cannot_be_inferred(self, tmp_path: Path) -> None:
        """Inference needs at least two observed labels per column."""
        path = tmp_path / "d.csv"
        path.write_text("A,B\n0,1\n1,1\n")
        with pytest.raises(DataError, match="Cannot infer"):
            load_dataset(path)

    def test_missing_file(self, tmp_path: Path) -> None:
        """An absent file is a DataError."""
        with pytest.raises(DataError, match="Cannot parse CSV"):
            load_dataset(tmp_path / "absent.csv")


class TestSaveDataset:
    """Tests for writing CSV datasets."""

    def test_writes_labels(self, tmp_path: Path) -> None:
        """Codes are written as their category labels."""
        variables = VariableSet.from_domains([("A", ["yes", "no"]), ("B", ["x", "y"])])
        dataset = Dataset.from_columns(variables, [[1, 0], [0, 0]])
        path = tmp_path / "out.csv"
        save_dataset(dataset, path)

        assert path.read_text().splitlines() == ["A,B", "no,x", "yes,x"]

    def test_save_then_load(self, tmp_path: Path, tiny_dataset: Dataset) -> None:
        """Saved data loads back against the same domain."""
        path = tmp_path / "tiny.csv"
        save_dataset(tiny_dataset, path)

        assert load_dataset(path, tiny_dataset.variables) == tiny_dataset
