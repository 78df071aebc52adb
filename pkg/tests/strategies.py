"""Hypothesis strategies and exhaustive enumerations shared by graph tests."""

from collections import defaultdict
from itertools import combinations, product

from hypothesis import strategies as st

from fedges.graph import Dag, Pdag, dag_to_cpdag, is_acyclic
from fedges.graph.dag import Edge
from fedges.models import VariableSet

CpdagKey = tuple[tuple[Edge, ...], tuple[Edge, ...]]


def _forward_edges(draw: st.DrawFn, n: int) -> list[Edge]:
    """Random edges that follow a random permutation, so never a cycle."""
    perm = draw(st.permutations(range(n)))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return [(perm[i], perm[j]) for (i, j), k in zip(pairs, keep, strict=True) if k]


def _variables(n: int) -> VariableSet:
    return VariableSet.binary([f"X{i}" for i in range(n)])


@st.composite
def random_dags(draw: st.DrawFn, max_nodes: int = 6) -> Dag:
    """DAGs built from a random permutation and random forward edges."""
    n = draw(st.integers(min_value=2, max_value=max_nodes))
    return Dag.from_edges(_variables(n), _forward_edges(draw, n))


@st.composite
def dag_triples(draw: st.DrawFn, max_nodes: int = 5) -> tuple[Dag, Dag, Dag]:
    """Three independent random DAGs over the same variables."""
    n = draw(st.integers(min_value=2, max_value=max_nodes))
    variables = _variables(n)
    a, b, c = (Dag.from_edges(variables, _forward_edges(draw, n)) for _ in range(3))
    return a, b, c


def all_dags(variables: VariableSet) -> list[Dag]:
    """Every DAG over ``variables``; each pair is absent or oriented either way."""
    n = len(variables)
    pairs = list(combinations(range(n), 2))
    dags: list[Dag] = []
    for choice in product((None, False, True), repeat=len(pairs)):
        edges = [
            (v, u) if flipped else (u, v)
            for (u, v), flipped in zip(pairs, choice, strict=True)
            if flipped is not None
        ]
        if is_acyclic(n, edges):
            dags.append(Dag.from_edges(variables, edges))
    return dags


def cpdag_key(p: Pdag) -> CpdagKey:
    """Hashable form of a PDAG."""
    return tuple(p.directed_edges()), tuple(p.undirected_edges())


def equivalence_classes(variables: VariableSet) -> dict[CpdagKey, list[Dag]]:
    """All DAGs over ``variables`` grouped by their CPDAG."""
    classes: dict[CpdagKey, list[Dag]] = defaultdict(list)
    for g in all_dags(variables):
        classes[cpdag_key(dag_to_cpdag(g))].append(g)
    return dict(classes)
