"""Partially directed graphs (GES search state)."""

from collections.abc import Iterable

import networkx as nx

from fedges.graph.dag import Edge, is_acyclic
from fedges.models import VariableSet


class Pdag:
    """Mutable partially directed graph.

    Each node pair carries at most one edge: directed ``u -> v`` or undirected
    ``u - v``. Callers that hand a Pdag to another component pass a ``copy()``.
    """

    __slots__ = ("variables", "_parents", "_children", "_neighbors", "_adj")

    def __init__(
        self,
        variables: VariableSet,
        directed: Iterable[Edge] = (),
        undirected: Iterable[Edge] = (),
    ) -> None:
        n = len(variables)
        self.variables = variables
        self._parents: list[set[int]] = [set() for _ in range(n)]
        self._children: list[set[int]] = [set() for _ in range(n)]
        self._neighbors: list[set[int]] = [set() for _ in range(n)]
        self._adj = [0] * n
        for u, v in directed:
            self.add_directed(u, v)
        for u, v in undirected:
            self.add_undirected(u, v)

    def copy(self) -> "Pdag":
        """Independent copy."""
        clone = Pdag.__new__(Pdag)
        clone.variables = self.variables
        clone._parents = [set(s) for s in self._parents]
        clone._children = [set(s) for s in self._children]
        clone._neighbors = [set(s) for s in self._neighbors]
        clone._adj = list(self._adj)
        return clone

    @property
    def n(self) -> int:
        """Number of nodes."""
        return len(self._parents)

    # Queries

    def is_adjacent(self, u: int, v: int) -> bool:
        """True iff any edge joins ``u`` and ``v``."""
        return bool(self._adj[u] >> v & 1)

    def has_directed(self, u: int, v: int) -> bool:
        """True iff ``u -> v``."""
        return v in self._children[u]

    def has_undirected(self, u: int, v: int) -> bool:
        """True iff ``u - v``."""
        return v in self._neighbors[u]

    def parents(self, v: int) -> set[int]:
        """Directed parents of ``v`` (live view; do not mutate)."""
        return self._parents[v]

    def children(self, v: int) -> set[int]:
        """Directed children of ``v`` (live view; do not mutate)."""
        return self._children[v]

    def neighbors(self, v: int) -> set[int]:
        """Undirected neighbours of ``v`` (live view; do not mutate)."""
        return self._neighbors[v]

    def adjacent(self, v: int) -> set[int]:
        """All nodes joined to ``v`` by any edge."""
        return self._parents[v] | self._children[v] | self._neighbors[v]

    def is_clique(self, nodes: Iterable[int]) -> bool:
        """True iff every pair in ``nodes`` is adjacent."""
        members = list(nodes)
        for i, a in enumerate(members):
            mask = self._adj[a]
            for b in members[i + 1 :]:
                if not mask >> b & 1:
                    return False
        return True

    def directed_edges(self) -> list[Edge]:
        """Directed edges in ascending order."""
        return sorted((u, v) for u in range(self.n) for v in self._children[u])

    def undirected_edges(self) -> list[Edge]:
        """Undirected edges as ascending pairs in ascending order."""
        return sorted(
            (u, v) for u in range(self.n) for v in self._neighbors[u] if u < v
        )

    @property
    def edge_count(self) -> int:
        """Number of adjacencies."""
        return len(self.directed_edges()) + len(self.undirected_edges())

    # Mutation

    def add_directed(self, u: int, v: int) -> None:
        """Add ``u -> v``; the pair must be nonadjacent."""
        self._check_new(u, v)
        self._children[u].add(v)
        self._parents[v].add(u)
        self._link(u, v)

    def add_undirected(self, u: int, v: int) -> None:
        """Add ``u - v``; the pair must be nonadjacent."""
        self._check_new(u, v)
        self._neighbors[u].add(v)
        self._neighbors[v].add(u)
        self._link(u, v)

    def remove_edge(self, u: int, v: int) -> None:
        """Remove whatever edge joins ``u`` and ``v``."""
        self._children[u].discard(v)
        self._parents[v].discard(u)
        self._children[v].discard(u)
        self._parents[u].discard(v)
        self._neighbors[u].discard(v)
        self._neighbors[v].discard(u)
        self._adj[u] &= ~(1 << v)
        self._adj[v] &= ~(1 << u)

    def orient(self, u: int, v: int) -> None:
        """Turn the edge between ``u`` and ``v`` into ``u -> v``."""
        if not self.is_adjacent(u, v):
            raise ValueError(f"Cannot orient {u}->{v}: nodes are not adjacent")
        self.remove_edge(u, v)
        self.add_directed(u, v)

    def _check_new(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"Self-loop on node {u}")
        if self.is_adjacent(u, v):
            raise ValueError(f"Nodes {u} and {v} are already adjacent")

    def _link(self, u: int, v: int) -> None:
        self._adj[u] |= 1 << v
        self._adj[v] |= 1 << u

    # Structure checks

    def is_directed_acyclic(self) -> bool:
        """True iff the directed part has no cycle."""
        return is_acyclic(self.n, self.directed_edges())

    def is_chordal_undirected(self) -> bool:
        """True iff every undirected component induces a chordal graph."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.undirected_edges())
        return all(
            nx.is_chordal(graph.subgraph(component))
            for component in nx.connected_components(graph)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Pdag):
            return NotImplemented
        return (
            self.variables == other.variables
            and self.directed_edges() == other.directed_edges()
            and self.undirected_edges() == other.undirected_edges()
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        names = self.variables.names
        parts = [f"{names[u]}->{names[v]}" for u, v in self.directed_edges()]
        parts += [f"{names[u]}--{names[v]}" for u, v in self.undirected_edges()]
        return f"Pdag({', '.join(parts)})"
