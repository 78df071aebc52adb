"""BIF (Bayesian Interchange Format) reader and writer.

Supports the discrete subset used by the bnlearn repository networks:

    network NAME { ... }
    variable X { type discrete [ 2 ] { a, b }; }
    probability ( X ) { table 0.4, 0.6; }
    probability ( Y | X, Z ) { (a, c) 0.1, 0.9; default 0.5, 0.5; }

Properties are accepted and ignored. A ``table`` line for a node with
parents lists child categories slowest and the last parent fastest.
"""

import bisect
import itertools
import logging
import math
import re
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from fedges.exceptions import BifParseError, CycleError, DataError
from fedges.graph.dag import Dag
from fedges.ingest.network import BayesNet, Cpt
from fedges.models import VariableSet

logger = logging.getLogger(__name__)

# Rows further than this from summing to 1 are rejected; closer rows are rescaled.
ROW_SUM_TOLERANCE = 1e-3

# Declared names that carry no information; load_bif uses the file stem instead.
_UNNAMED = frozenset({"", "unknown", "network"})

_TOKEN_RE = re.compile(
    r"""
    (?P<space>\s+)
    |(?P<line_comment>//[^\n]*)
    |(?P<block_comment>/\*.*?\*/)
    |(?P<string>"[^"]*")
    |(?P<punct>[{}()\[\];,|])
    |(?P<word>[^\s{}()\[\];,|"]+)
    """,
    re.DOTALL | re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    line_starts = [0] + [m.end() for m in re.finditer("\n", text)]
    tokens: list[_Token] = []
    position = 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        line = bisect.bisect_right(line_starts, position)
        column = position - line_starts[line - 1] + 1
        if match is None:
            raise BifParseError(
                f"Unexpected character {text[position]!r}", line, column
            )
        kind = match.lastgroup or ""
        if kind in ("punct", "word"):
            tokens.append(_Token(kind, match.group(), line, column))
        elif kind == "string":
            tokens.append(_Token("word", match.group()[1:-1], line, column))
        position = match.end()
    return tokens


@dataclass
class _ProbabilityBlock:
    child: str
    parents: list[str]
    rows: dict[tuple[str, ...], list[float]]
    table: list[float] | None
    default: list[float] | None
    anchor: _Token


class _Parser:
    def __init__(self, tokens: list[_Token], end: tuple[int, int]) -> None:
        self.tokens = tokens
        self.pos = 0
        self.end = end
        self.network_name = "network"
        self.domains: dict[str, tuple[list[str], _Token]] = {}
        self.blocks: dict[str, _ProbabilityBlock] = {}

    # Token helpers

    def _error(self, message: str, token: _Token | None = None) -> BifParseError:
        if token is None:
            token = self._peek()
        if token is None:
            return BifParseError(message, *self.end)
        return BifParseError(message, token.line, token.column)

    def _peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self) -> _Token:
        token = self._peek()
        if token is None:
            raise self._error("Unexpected end of document")
        self.pos += 1
        return token

    def _expect(self, text: str) -> _Token:
        token = self._next()
        if token.text != text:
            raise self._error(f"Expected {text!r}, found {token.text!r}", token)
        return token

    def _word(self) -> _Token:
        token = self._next()
        if token.kind != "word":
            raise self._error(f"Expected a name, found {token.text!r}", token)
        return token

    def _skip_statement(self) -> None:
        while self._next().text != ";":
            pass

    def _skip_block(self) -> None:
        self._expect("{")
        depth = 1
        while depth:
            text = self._next().text
            depth += {"{": 1, "}": -1}.get(text, 0)

    def _numbers(self) -> list[float]:
        values: list[float] = []
        while True:
            token = self._next()
            if token.text == ";":
                return values
            if token.text == ",":
                continue
            try:
                values.append(float(token.text))
            except ValueError as e:
                raise self._error(
                    f"Expected a probability, found {token.text!r}", token
                ) from e

    # Grammar

    def parse(self) -> None:
        while self._peek() is not None:
            keyword = self._word()
            if keyword.text == "network":
                self.network_name = self._word().text
                self._skip_block()
            elif keyword.text == "variable":
                self._variable()
            elif keyword.text == "probability":
                self._probability()
            else:
                raise self._error(f"Unexpected keyword {keyword.text!r}", keyword)

    def _variable(self) -> None:
        name = self._word()
        if name.text in self.domains:
            raise self._error(f"Variable {name.text!r} declared twice", name)
        self._expect("{")
        categories: list[str] | None = None
        while (token := self._next()).text != "}":
            if token.text == "property":
                self._skip_statement()
            elif token.text == "type":
                kind = self._word()
                if kind.text != "discrete":
                    raise self._error(
                        f"Variable {name.text!r} is not discrete ({kind.text})", kind
                    )
                self._expect("[")
                size_token = self._word()
                self._expect("]")
                self._expect("{")
                categories = []
                while (label := self._next()).text != "}":
                    if label.text == ",":
                        continue
                    if label.kind != "word":
                        raise self._error(f"Bad category {label.text!r}", label)
                    categories.append(label.text)
                self._expect(";")
                if not size_token.text.isdigit() or int(size_token.text) != len(
                    categories
                ):
                    raise self._error(
                        f"Variable {name.text!r} declares {size_token.text} "
                        f"categories but lists {len(categories)}",
                        size_token,
                    )
            else:
                raise self._error(f"Unexpected token {token.text!r}", token)
        if categories is None:
            raise self._error(f"Variable {name.text!r} has no type", name)
        self.domains[name.text] = (categories, name)

    def _known(self, token: _Token) -> _Token:
        if token.text not in self.domains:
            raise self._error(f"Unknown variable {token.text!r}", token)
        return token

    def _probability(self) -> None:
        anchor = self._expect("(")
        child = self._known(self._word())
        parents: list[str] = []
        token = self._next()
        if token.text == "|":
            while (token := self._next()).text != ")":
                if token.text == ",":
                    continue
                parents.append(self._known(token).text)
        elif token.text != ")":
            raise self._error(f"Expected '|' or ')', found {token.text!r}", token)
        if child.text in self.blocks:
            raise self._error(f"Second probability block for {child.text!r}", child)

        block = _ProbabilityBlock(child.text, parents, {}, None, None, anchor)
        self._expect("{")
        while (token := self._next()).text != "}":
            if token.text == "property":
                self._skip_statement()
            elif token.text == "table":
                block.table = self._numbers()
            elif token.text == "default":
                block.default = self._numbers()
            elif token.text == "(":
                labels: list[str] = []
                while (label := self._next()).text != ")":
                    if label.text != ",":
                        labels.append(label.text)
                block.rows[tuple(labels)] = self._row_values(labels, token, parents)
            else:
                raise self._error(f"Unexpected token {token.text!r}", token)
        self.blocks[child.text] = block

    def _row_values(
        self, labels: list[str], anchor: _Token, parents: list[str]
    ) -> list[float]:
        if len(labels) != len(parents):
            raise self._error(
                f"Row lists {len(labels)} parent values, expected {len(parents)}",
                anchor,
            )
        for label, parent in zip(labels, parents, strict=True):
            if label not in self.domains[parent][0]:
                raise self._error(
                    f"Unknown category {label!r} for parent {parent!r}", anchor
                )
        return self._numbers()

    # Assembly

    def build(self) -> BayesNet:
        variables = VariableSet.from_domains(
            (name, categories) for name, (categories, _) in self.domains.items()
        )
        parent_sets: list[list[int]] = []
        for name, (_, declared) in self.domains.items():
            if name not in self.blocks:
                raise self._error(f"No probability block for {name!r}", declared)
            block_parents = self.blocks[name].parents
            parent_sets.append([variables.index_of(p) for p in block_parents])
        try:
            dag = Dag(variables, parent_sets)
        except CycleError as e:
            raise BifParseError("Network structure is cyclic", *self.end) from e

        cpts = tuple(
            self._cpt(variables, variables.index_of(name), self.blocks[name])
            for name in self.domains
        )
        return BayesNet(dag=dag, cpts=cpts, name=self.network_name)

    def _cpt(self, variables: VariableSet, child: int, block: _ProbabilityBlock) -> Cpt:
        r = variables[child].cardinality
        parent_idx = [variables.index_of(p) for p in block.parents]
        parent_cards = [variables[p].cardinality for p in parent_idx]
        q = math.prod(parent_cards)
        values = np.full((*parent_cards, r), np.nan)

        if block.table is not None:
            if len(block.table) != q * r:
                raise self._error(
                    f"Table for {block.child!r} has {len(block.table)} entries, "
                    f"expected {q * r}",
                    block.anchor,
                )
            values[...] = np.moveaxis(
                np.asarray(block.table).reshape(r, *parent_cards), 0, -1
            )
        for labels, probabilities in block.rows.items():
            if len(probabilities) != r:
                raise self._error(
                    f"Row {labels} of {block.child!r} has {len(probabilities)} "
                    f"probabilities, expected {r}",
                    block.anchor,
                )
            index = tuple(
                variables[p].categories.index(label)
                for p, label in zip(parent_idx, labels, strict=True)
            )
            values[index] = probabilities
        if block.default is not None:
            if len(block.default) != r:
                raise self._error(
                    f"Default row of {block.child!r} has wrong length", block.anchor
                )
            missing = np.isnan(values[..., 0])
            values[missing] = block.default

        filled = int(np.sum(~np.isnan(values[..., 0])))
        if filled != q:
            raise self._error(
                f"Probability block for {block.child!r} defines {filled} rows, "
                f"expected {q}",
                block.anchor,
            )

        # Reorder axes so parents appear in ascending index order.
        order = sorted(range(len(parent_idx)), key=lambda i: parent_idx[i])
        table = np.transpose(values, (*order, len(parent_idx))).reshape(q, r)
        return Cpt(
            child=child,
            parents=tuple(sorted(parent_idx)),
            table=self._normalized(table, block),
        )

    def _normalized(
        self, table: np.ndarray, block: _ProbabilityBlock
    ) -> np.ndarray:
        sums = table.sum(axis=1, keepdims=True)
        error = float(np.max(np.abs(sums - 1.0)))
        if np.any(table < 0) or error > ROW_SUM_TOLERANCE:
            raise self._error(
                f"Probabilities for {block.child!r} are not distributions "
                f"(row-sum error {error:.3g})",
                block.anchor,
            )
        if error > 0:
            logger.debug(
                f"Rescaled rows of {block.child!r} (row-sum error {error:.3g})"
            )
        return np.asarray(table / sums, dtype=np.float64)


def parse_bif(text: str) -> BayesNet:
    """Parse a discrete BIF document.

    Args:
        text: Document contents.

    Returns:
        BayesNet with variables in declaration order.

    Raises:
        BifParseError: On syntax errors, unknown variables or categories,
            non-discrete variables, or probability blocks with the wrong
            number of rows or entries.
    """
    lines = text.split("\n")
    parser = _Parser(_tokenize(text), (len(lines), len(lines[-1]) + 1))
    parser.parse()
    net = parser.build()
    logger.info(
        f"Parsed network {net.name!r}: {net.dag.n} nodes, {net.dag.edge_count} edges"
    )
    return net


def load_bif(path: Path | str) -> BayesNet:
    """Read and parse a BIF file.

    Networks declared as ``network unknown`` (or with no name) take the file
    stem as their name, so ``asia.bif`` loads as "asia".

    Raises:
        DataError: If the file cannot be read.
        BifParseError: If the contents do not parse; the message names the file.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DataError(f"Cannot read network file {path}: {e}") from e
    try:
        net = parse_bif(text)
    except BifParseError as e:
        raise BifParseError(f"{path.name}: {e.reason}", e.line, e.column) from e
    if net.name.strip().lower() in _UNNAMED:
        logger.debug(f"{path.name} declares no network name, using {path.stem!r}")
        net = replace(net, name=path.stem)
    return net


def _format(value: float) -> str:
    return repr(float(value))


def render_bif(net: BayesNet) -> str:
    """Serialize a BayesNet to BIF with explicit per-configuration rows."""
    variables = net.variables
    out = [f"network {net.name} {{", "}"]
    for var in variables:
        out.append(f"variable {var.name} {{")
        out.append(
            f"  type discrete [ {var.cardinality} ] {{ {', '.join(var.categories)} }};"
        )
        out.append("}")
    for cpt in net.cpts:
        child = variables[cpt.child].name
        if not cpt.parents:
            out.append(f"probability ( {child} ) {{")
            out.append(f"  table {', '.join(_format(p) for p in cpt.table[0])};")
        else:
            names = ", ".join(variables[p].name for p in cpt.parents)
            out.append(f"probability ( {child} | {names} ) {{")
            configs = itertools.product(
                *(variables[p].categories for p in cpt.parents)
            )
            for row, labels in zip(cpt.table, configs, strict=True):
                values = ", ".join(_format(p) for p in row)
                out.append(f"  ({', '.join(labels)}) {values};")
        out.append("}")
    return "\n".join(out) + "\n"
