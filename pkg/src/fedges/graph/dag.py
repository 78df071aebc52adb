"""Directed acyclic graphs, orders and moral graphs.

Graphs store, per node, a frozen parent set, a frozen child set and an
adjacency bitmask so that adjacency tests are a single bit lookup.
"""

import heapq
import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import networkx as nx

from fedges.exceptions import CycleError
from fedges.models import VariableSet

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


def is_acyclic(n: int, edges: Iterable[Edge]) -> bool:
    """Check whether directed edges over ``n`` nodes admit a topological order.

    Args:
        n: Number of nodes (indices 0..n-1).
        edges: Directed edges ``(tail, head)``.

    Returns:
        True iff the edge set has no directed cycle.
    """
    children: list[list[int]] = [[] for _ in range(n)]
    indegree = [0] * n
    for tail, head in edges:
        if tail == head:
            return False
        children[tail].append(head)
        indegree[head] += 1
    return len(_kahn(children, indegree)) == n


def _kahn(children: Sequence[Iterable[int]], indegree: list[int]) -> list[int]:
    """Kahn's algorithm with ascending-index tie-break; consumes ``indegree``."""
    ready = [v for v, d in enumerate(indegree) if d == 0]
    heapq.heapify(ready)
    order: list[int] = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for child in children[v]:
            indegree[child] -= 1
            if indegree[child] == 0:
                heapq.heappush(ready, child)
    return order


@dataclass(frozen=True)
class Order:
    """A permutation of node indices.

    Attributes:
        sequence: Node at each position.
        positions: Position of each node.
    """

    sequence: tuple[int, ...]
    positions: tuple[int, ...]

    @classmethod
    def from_sequence(cls, sequence: Sequence[int]) -> "Order":
        """Build an Order from the node sequence.

        Raises:
            ValueError: If the sequence is not a permutation of 0..n-1.
        """
        n = len(sequence)
        if sorted(sequence) != list(range(n)):
            raise ValueError(f"Not a permutation of 0..{n - 1}: {list(sequence)}")
        positions = [0] * n
        for position, node in enumerate(sequence):
            positions[node] = position
        return cls(tuple(sequence), tuple(positions))

    def __len__(self) -> int:
        return len(self.sequence)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sequence)

    def position(self, node: int) -> int:
        """Position of ``node`` in the order."""
        return self.positions[node]

    def precedes(self, u: int, v: int) -> bool:
        """True iff ``u`` comes before ``v``."""
        return self.positions[u] < self.positions[v]


class Dag:
    """Immutable directed acyclic graph over an indexed VariableSet."""

    __slots__ = ("variables", "_parents", "_children", "_adj")

    def __init__(
        self,
        variables: VariableSet,
        parents: Sequence[Iterable[int]],
        *,
        validate: bool = True,
    ) -> None:
        n = len(variables)
        if len(parents) != n:
            raise ValueError(f"Expected {n} parent sets, got {len(parents)}")
        frozen = tuple(frozenset(ps) for ps in parents)
        children: list[set[int]] = [set() for _ in range(n)]
        adj = [0] * n
        for child, ps in enumerate(frozen):
            for parent in ps:
                if parent == child:
                    raise ValueError(f"Self-loop on node {child}")
                if not 0 <= parent < n:
                    raise ValueError(f"Parent index {parent} out of range")
                children[parent].add(child)
                adj[child] |= 1 << parent
                adj[parent] |= 1 << child
        self.variables = variables
        self._parents = frozen
        self._children = tuple(frozenset(cs) for cs in children)
        self._adj = tuple(adj)
        if validate and not is_acyclic(n, self.edges()):
            raise CycleError("Parent sets contain a directed cycle")

    @classmethod
    def empty(cls, variables: VariableSet) -> "Dag":
        """Graph with no edges."""
        return cls(variables, [()] * len(variables), validate=False)

    @classmethod
    def from_edges(cls, variables: VariableSet, edges: Iterable[Edge]) -> "Dag":
        """Build a DAG from ``(tail, head)`` index pairs."""
        parents: list[set[int]] = [set() for _ in range(len(variables))]
        for tail, head in edges:
            parents[head].add(tail)
        return cls(variables, parents)

    @classmethod
    def from_named_edges(
        cls, variables: VariableSet, edges: Iterable[tuple[str, str]]
    ) -> "Dag":
        """Build a DAG from ``(tail, head)`` variable-name pairs."""
        return cls.from_edges(
            variables,
            ((variables.index_of(t), variables.index_of(h)) for t, h in edges),
        )

    @property
    def n(self) -> int:
        """Number of nodes."""
        return len(self._parents)

    def pa(self, node: int) -> frozenset[int]:
        """Parent set of ``node``."""
        return self._parents[node]

    def children(self, node: int) -> frozenset[int]:
        """Child set of ``node``."""
        return self._children[node]

    def has_edge(self, tail: int, head: int) -> bool:
        """True iff ``tail -> head`` is an edge."""
        return tail in self._parents[head]

    def is_adjacent(self, u: int, v: int) -> bool:
        """True iff ``u`` and ``v`` are joined by an edge in either direction."""
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        """All edges in canonical (tail, head) ascending order."""
        return sorted(
            (parent, child)
            for child, ps in enumerate(self._parents)
            for parent in ps
        )

    @property
    def edge_count(self) -> int:
        """Number of edges."""
        return sum(len(ps) for ps in self._parents)

    @property
    def max_parents(self) -> int:
        """Largest parent-set size."""
        return max((len(ps) for ps in self._parents), default=0)

    def skeleton(self) -> frozenset[Edge]:
        """Undirected edges as ascending pairs."""
        return frozenset((min(u, v), max(u, v)) for u, v in self.edges())

    def v_structures(self) -> frozenset[tuple[int, int, int]]:
        """Colliders ``a -> b <- c`` with ``a < c`` nonadjacent."""
        found = set()
        for b, ps in enumerate(self._parents):
            ordered = sorted(ps)
            for i, a in enumerate(ordered):
                for c in ordered[i + 1 :]:
                    if not self.is_adjacent(a, c):
                        found.add((a, b, c))
        return frozenset(found)

    def is_markov_equivalent(self, other: "Dag") -> bool:
        """Same skeleton and same v-structures."""
        return (
            self.skeleton() == other.skeleton()
            and self.v_structures() == other.v_structures()
        )

    def ancestors_of(self, nodes: Iterable[int]) -> set[int]:
        """Nodes with a directed path into ``nodes``, including ``nodes``."""
        seen = set(nodes)
        stack = list(seen)
        while stack:
            for parent in self._parents[stack.pop()]:
                if parent not in seen:
                    seen.add(parent)
                    stack.append(parent)
        return seen

    def with_edges(
        self,
        added: Iterable[Edge] = (),
        removed: Iterable[Edge] = (),
    ) -> "Dag":
        """Return a copy with edges added and removed (validated)."""
        parents = [set(ps) for ps in self._parents]
        for tail, head in removed:
            parents[head].discard(tail)
        for tail, head in added:
            parents[head].add(tail)
        return Dag(self.variables, parents)

    def to_networkx(self) -> nx.DiGraph:
        """Convert to a networkx DiGraph on node indices."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dag):
            return NotImplemented
        return self.variables == other.variables and self._parents == other._parents

    def __hash__(self) -> int:
        return hash(self._parents)

    def __repr__(self) -> str:
        names = self.variables.names
        arcs = ", ".join(f"{names[t]}->{names[h]}" for t, h in self.edges())
        return f"Dag({arcs})"


@dataclass(frozen=True)
class UndirectedGraph:
    """Undirected graph with edges stored as ascending index pairs."""

    variables: VariableSet
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if u >= v:
                raise ValueError(f"Undirected edge must be ascending, got {(u, v)}")

    @property
    def edge_count(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        """True iff ``u`` and ``v`` are joined."""
        return (min(u, v), max(u, v)) in self.edges


def topological_order(g: Dag) -> Order:
    """Topological order of ``g`` with ties broken by ascending node index.

    Raises:
        CycleError: If ``g`` contains a directed cycle.
    """
    indegree = [len(g.pa(v)) for v in range(g.n)]
    order = _kahn([sorted(g.children(v)) for v in range(g.n)], indegree)
    if len(order) != g.n:
        raise CycleError("Graph has a directed cycle; no topological order exists")
    return Order.from_sequence(order)


def moralize(g: Dag) -> UndirectedGraph:
    """Moral graph: drop directions and marry parents that share a child."""
    edges: set[Edge] = set(g.skeleton())
    for child in range(g.n):
        ordered = sorted(g.pa(child))
        for i, a in enumerate(ordered):
            for b in ordered[i + 1 :]:
                edges.add((a, b))
    return UndirectedGraph(g.variables, frozenset(edges))
