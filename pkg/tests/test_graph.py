"""Tests for DAG, PDAG and edge-list primitives."""

from pathlib import Path

import pytest

from fedges.exceptions import CycleError, DataError
from fedges.graph import (
    Dag,
    Order,
    Pdag,
    is_acyclic,
    moralize,
    parse_edge_list,
    read_graph,
    read_structure,
    render_edge_list,
    topological_order,
    write_graph,
)
from fedges.models import VariableSet


class TestDag:
    """Tests for the immutable DAG type."""

    def test_edges_are_canonical(self, abc: VariableSet) -> None:
        """edges() is sorted by (tail, head) regardless of input order."""
        g = Dag.from_edges(abc, [(1, 2), (0, 2), (0, 1)])

        assert g.edges() == [(0, 1), (0, 2), (1, 2)]
        assert g.edge_count == 3
        assert g.max_parents == 2

    def test_parents_and_children(self, abc: VariableSet) -> None:
        """Parent and child sets mirror each other."""
        g = Dag.from_edges(abc, [(0, 2), (1, 2)])

        assert g.pa(2) == frozenset({0, 1})
        assert g.children(0) == frozenset({2})
        assert g.has_edge(0, 2)
        assert not g.has_edge(2, 0)
        assert g.is_adjacent(2, 0)
        assert not g.is_adjacent(0, 1)

    def test_cycle_rejected(self, abc: VariableSet) -> None:
        """A directed cycle raises CycleError."""
        with pytest.raises(CycleError):
            Dag.from_edges(abc, [(0, 1), (1, 2), (2, 0)])

    def test_self_loop_rejected(self, abc: VariableSet) -> None:
        """A node cannot be its own parent."""
        with pytest.raises(ValueError, match="Self-loop"):
            Dag.from_edges(abc, [(1, 1)])

    def test_named_edges(self, abc: VariableSet) -> None:
        """Named edges resolve through the VariableSet."""
        g = Dag.from_named_edges(abc, [("A", "C")])
        assert g.edges() == [(0, 2)]

    def test_v_structures(self, abc: VariableSet) -> None:
        """Only nonadjacent parent pairs form v-structures."""
        collider = Dag.from_edges(abc, [(0, 2), (1, 2)])
        shielded = Dag.from_edges(abc, [(0, 1), (0, 2), (1, 2)])

        assert collider.v_structures() == frozenset({(0, 2, 1)})
        assert shielded.v_structures() == frozenset()

    def test_markov_equivalence(self, abc: VariableSet) -> None:
        """Chains in either direction are equivalent; the collider is not."""
        forward = Dag.from_edges(abc, [(0, 1), (1, 2)])
        backward = Dag.from_edges(abc, [(2, 1), (1, 0)])
        collider = Dag.from_edges(abc, [(0, 1), (2, 1)])

        assert forward.is_markov_equivalent(backward)
        assert not forward.is_markov_equivalent(collider)

    def test_ancestors_include_inputs(self, abcd: VariableSet) -> None:
        """ancestors_of returns the inputs plus everything above them."""
        g = Dag.from_edges(abcd, [(0, 1), (1, 2)])
        assert g.ancestors_of([2]) == {0, 1, 2}
        assert g.ancestors_of([3]) == {3}

    def test_with_edges_returns_new_dag(self, abc: VariableSet) -> None:
        """with_edges leaves the original untouched."""
        g = Dag.from_edges(abc, [(0, 1)])
        h = g.with_edges(added=[(1, 2)], removed=[(0, 1)])

        assert g.edges() == [(0, 1)]
        assert h.edges() == [(1, 2)]

    def test_equality_and_hash(self, abc: VariableSet) -> None:
        """Equal edge sets give equal, equally hashed DAGs."""
        a = Dag.from_edges(abc, [(0, 1), (1, 2)])
        b = Dag.from_edges(abc, [(1, 2), (0, 1)])

        assert a == b
        assert hash(a) == hash(b)
        assert a != Dag.empty(abc)

    def test_to_networkx(self, abc: VariableSet) -> None:
        """networkx conversion keeps every node and edge."""
        graph = Dag.from_edges(abc, [(0, 1)]).to_networkx()
        assert sorted(graph.nodes) == [0, 1, 2]
        assert list(graph.edges) == [(0, 1)]


class TestOrder:
    """Tests for orders and topological sorting."""

    def test_from_sequence(self) -> None:
        """Positions invert the sequence."""
        order = Order.from_sequence([2, 0, 1])

        assert order.position(2) == 0
        assert order.precedes(0, 1)
        assert list(order) == [2, 0, 1]
        assert len(order) == 3

    def test_not_a_permutation(self) -> None:
        """Repeated or missing nodes are rejected."""
        with pytest.raises(ValueError, match="permutation"):
            Order.from_sequence([0, 0, 2])

    def test_topological_order_ties_by_index(self, abc: VariableSet) -> None:
        """Ready nodes are emitted in ascending index order."""
        assert list(topological_order(Dag.empty(abc))) == [0, 1, 2]
        assert list(topological_order(Dag.from_edges(abc, [(2, 0)]))) == [1, 2, 0]

    def test_topological_order_respects_edges(self, child_dag: Dag) -> None:
        """Every edge points forward in the order."""
        order = topological_order(child_dag)
        assert all(order.precedes(t, h) for t, h in child_dag.edges())

    def test_is_acyclic(self) -> None:
        """is_acyclic works on raw edge lists."""
        assert is_acyclic(3, [(0, 1), (1, 2)])
        assert not is_acyclic(3, [(0, 1), (1, 0)])
        assert not is_acyclic(2, [(1, 1)])


class TestMoralize:
    """Tests for moral graphs."""

    def test_collider_parents_married(self, abc: VariableSet) -> None:
        """Parents of a common child become adjacent."""
        moral = moralize(Dag.from_edges(abc, [(0, 2), (1, 2)]))

        assert moral.edges == frozenset({(0, 1), (0, 2), (1, 2)})
        assert moral.has_edge(1, 0)

    def test_chain_unchanged(self, abc: VariableSet) -> None:
        """A chain's moral graph is its skeleton."""
        moral = moralize(Dag.from_edges(abc, [(0, 1), (1, 2)]))
        assert moral.edge_count == 2

    def test_child_structure(self, child_dag: Dag) -> None:
        """The Child structure has 25 edges and 30 moral edges."""
        assert child_dag.edge_count == 25
        assert moralize(child_dag).edge_count == 30


class TestPdag:
    """Tests for the mutable search-state graph."""

    def test_one_edge_per_pair(self, abc: VariableSet) -> None:
        """Adding a second edge between the same pair fails."""
        p = Pdag(abc, directed=[(0, 1)])
        with pytest.raises(ValueError, match="already adjacent"):
            p.add_undirected(1, 0)

    def test_orient_and_remove(self, abc: VariableSet) -> None:
        """orient replaces an undirected edge; remove_edge drops any edge."""
        p = Pdag(abc, undirected=[(0, 1), (1, 2)])
        p.orient(1, 0)

        assert p.has_directed(1, 0)
        assert not p.has_undirected(0, 1)
        assert p.undirected_edges() == [(1, 2)]

        p.remove_edge(2, 1)
        assert not p.is_adjacent(1, 2)
        assert p.edge_count == 1

    def test_orient_requires_adjacency(self, abc: VariableSet) -> None:
        """Nonadjacent nodes cannot be oriented."""
        with pytest.raises(ValueError, match="not adjacent"):
            Pdag(abc).orient(0, 1)

    def test_copy_is_independent(self, abc: VariableSet) -> None:
        """Mutating a copy leaves the original intact."""
        p = Pdag(abc, undirected=[(0, 1)])
        clone = p.copy()
        clone.add_directed(1, 2)

        assert not p.is_adjacent(1, 2)
        assert p != clone

    def test_clique(self, abcd: VariableSet) -> None:
        """is_clique checks every pair of the given nodes."""
        p = Pdag(abcd, directed=[(0, 1)], undirected=[(0, 2), (1, 2)])

        assert p.is_clique([0, 1, 2])
        assert p.is_clique([3])
        assert not p.is_clique([0, 1, 3])

    def test_chordality(self, abcd: VariableSet) -> None:
        """A chordless 4-cycle is not chordal; adding a chord fixes it."""
        p = Pdag(abcd, undirected=[(0, 1), (1, 2), (2, 3), (0, 3)])
        assert not p.is_chordal_undirected()

        p.add_undirected(0, 2)
        assert p.is_chordal_undirected()


class TestEdgeList:
    """Tests for the plain-text graph format."""

    def test_render(self, abc: VariableSet) -> None:
        """Header names variables; edges follow in canonical order."""
        g = Dag.from_edges(abc, [(1, 2), (0, 1)])
        assert render_edge_list(g) == "# vars A,B,C\nA -> B\nB -> C\n"

    def test_parse_ignores_blank_and_comment_lines(self, abc: VariableSet) -> None:
        """Blank lines and later comments are skipped."""
        text = "# vars A,B,C\n\n# learned\nC -> A\n"
        assert parse_edge_list(text, abc).edges() == [(2, 0)]

    def test_write_and_read(self, abc: VariableSet, tmp_path: Path) -> None:
        """A written graph reads back unchanged."""
        g = Dag.from_edges(abc, [(0, 2), (1, 2)])
        path = tmp_path / "g.txt"
        write_graph(path, g)

        assert read_graph(path, abc) == g

    @pytest.mark.parametrize(
        ("text", "message"),
        [
            ("A -> B\n", "header"),
            ("# vars A,B\nA -> B\n", "do not match"),
            ("# vars A,B,C\nA B\n", "Malformed"),
            ("# vars A,B,C\nA -> Z\n", "Unknown variable"),
            ("# vars A,B,C\nA -> B\nB -> A\n", "DAG"),
        ],
    )
    def test_parse_errors(self, abc: VariableSet, text: str, message: str) -> None:
        """Malformed files raise DataError."""
        with pytest.raises(DataError, match=message):
            parse_edge_list(text, abc)

    def test_missing_file(self, abc: VariableSet, tmp_path: Path) -> None:
        """A missing file is a DataError."""
        with pytest.raises(DataError, match="Cannot read"):
            read_graph(tmp_path / "absent.txt", abc)

    def test_read_structure(self, tmp_path: Path) -> None:
        """Structure-only files get binary stand-ins named by the header."""
        path = tmp_path / "net.txt"
        path.write_text("# vars X,Y,Z\nX -> Z\nY -> Z\n")

        g = read_structure(path)
        assert g.variables == VariableSet.binary(["X", "Y", "Z"])
        assert g.edges() == [(0, 2), (1, 2)]

    @pytest.mark.parametrize("text", ["X -> Y\n", "# vars X,X\n"])
    def test_read_structure_errors(self, tmp_path: Path, text: str) -> None:
        """A missing header or a repeated name is a DataError."""
        path = tmp_path / "bad.txt"
        path.write_text(text)

        with pytest.raises(DataError):
            read_structure(path)
