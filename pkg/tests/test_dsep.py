"""Tests for d-separation."""

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fedges.graph import Dag, d_separated, reachable
from fedges.models import VariableSet
from tests.strategies import random_dags


class TestDSeparation:
    """Tests for the three canonical connections."""

    def test_chain(self, abc: VariableSet) -> None:
        """A chain is blocked by its middle node."""
        g = Dag.from_edges(abc, [(0, 1), (1, 2)])

        assert not d_separated(g, 0, 2, [])
        assert d_separated(g, 0, 2, [1])

    def test_fork(self, abc: VariableSet) -> None:
        """A common cause is blocked by conditioning on it."""
        g = Dag.from_edges(abc, [(1, 0), (1, 2)])

        assert not d_separated(g, 0, 2, [])
        assert d_separated(g, 0, 2, [1])

    def test_collider(self, abc: VariableSet) -> None:
        """A collider is open only when it is observed."""
        g = Dag.from_edges(abc, [(0, 2), (1, 2)])

        assert d_separated(g, 0, 1, [])
        assert not d_separated(g, 0, 1, [2])

    def test_collider_descendant_opens_path(self, abcd: VariableSet) -> None:
        """Observing a descendant of the collider also opens it."""
        g = Dag.from_edges(abcd, [(0, 2), (1, 2), (2, 3)])

        assert d_separated(g, 0, 1, [])
        assert not d_separated(g, 0, 1, [3])

    def test_adjacent_never_separated(self, abc: VariableSet) -> None:
        """Adjacent nodes are d-connected under any conditioning set."""
        g = Dag.from_edges(abc, [(0, 1)])
        assert not d_separated(g, 0, 1, [2])

    def test_invalid_arguments(self, abc: VariableSet) -> None:
        """Endpoints must be distinct and unobserved."""
        g = Dag.empty(abc)
        with pytest.raises(ValueError):
            d_separated(g, 0, 0, [])
        with pytest.raises(ValueError):
            d_separated(g, 0, 1, [1])

    def test_reachable_excludes_source_and_given(self, abc: VariableSet) -> None:
        """reachable lists only d-connected, unobserved nodes."""
        g = Dag.from_edges(abc, [(0, 1), (1, 2)])

        assert reachable(g, 0, []) == {1, 2}
        assert reachable(g, 0, [1]) == set()


class TestAgainstNetworkx:
    """Cross-check against networkx on random graphs."""

    @settings(max_examples=150, deadline=None)
    @given(g=random_dags(), data=st.data())
    def test_matches_networkx(self, g: Dag, data: st.DataObject) -> None:
        """d_separated agrees with networkx for random queries."""
        x, y = data.draw(
            st.lists(
                st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True
            )
        )
        others = [v for v in range(g.n) if v not in (x, y)]
        z = data.draw(st.sets(st.sampled_from(others)) if others else st.just(set()))

        expected = nx.is_d_separator(g.to_networkx(), {x}, {y}, set(z))
        assert d_separated(g, x, y, z) == expected


class TestSymmetry:
    """Properties that hold for every graph and query."""

    @settings(max_examples=150, deadline=None)
    @given(g=random_dags(), data=st.data())
    def test_symmetric(self, g: Dag, data: st.DataObject) -> None:
        """Swapping the two endpoints never changes the answer."""
        x, y = data.draw(
            st.lists(
                st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True
            )
        )
        others = [v for v in range(g.n) if v not in (x, y)]
        z = data.draw(st.sets(st.sampled_from(others)) if others else st.just(set()))

        assert d_separated(g, x, y, z) == d_separated(g, y, x, z)
