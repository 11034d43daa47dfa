import logging
from collections import deque
from typing import AbstractSet, Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

import networkx as nx

from toruscolor._types import ToruscolorError

logger = logging.getLogger(__name__)

DEFAULT_CYCLE_CAP = 8


class Graph:
    """
    Finite simple undirected graph on vertices `0..n-1`.

    Neighbor lists keep the order they were given in (a rotation file lists them in
    rotation order); equality only looks at the edge set.
    """

    def __init__(self, adjacency: Sequence[Iterable[int]]):
        self._adjacency: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(neighbors) for neighbors in adjacency
        )
        _check_simple(self._adjacency)
        self._neighbor_sets: Tuple[FrozenSet[int], ...] = tuple(
            frozenset(neighbors) for neighbors in self._adjacency
        )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> 'Graph':
        adjacency: List[List[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not 0 <= u < n:
                raise InvalidVertex(u, n)
            if not 0 <= v < n:
                raise InvalidVertex(v, n)
            adjacency[u].append(v)
            adjacency[v].append(u)

        return cls([sorted(neighbors) for neighbors in adjacency])

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> 'Graph':
        n = nx_graph.number_of_nodes()
        if set(nx_graph.nodes) != set(range(n)):
            raise ValueError('networkx graph nodes should be 0..n-1')

        return cls.from_edges(n, nx_graph.edges)

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    @property
    def n(self) -> int:
        return len(self._adjacency)

    @property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        return self._adjacency

    @property
    def edge_count(self) -> int:
        return sum(len(neighbors) for neighbors in self._adjacency) // 2

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adjacency[v]

    def neighbor_set(self, v: int) -> FrozenSet[int]:
        return self._neighbor_sets[v]

    def neighbors_in(self, v: int, subset: AbstractSet[int]) -> FrozenSet[int]:
        """N_H(v) for the subgraph H induced by `subset`."""

        return self._neighbor_sets[v] & subset

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    def min_degree(self) -> int:
        return min((len(neighbors) for neighbors in self._adjacency), default=0)

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges as `(u, v)` with `u < v`, in ascending order."""

        for u in range(self.n):
            for v in sorted(self._neighbor_sets[u]):
                if u < v:
                    yield u, v

    def components(self) -> List[List[int]]:
        """Vertex sets of the connected components, each sorted, ordered by least vertex."""

        return sorted(sorted(component) for component in nx.connected_components(self.to_networkx()))

    def adjacency_sets(self) -> Dict[int, set]:
        """Mutable copy of the adjacency, for algorithms that peel vertices."""

        return {v: set(neighbors) for v, neighbors in enumerate(self._neighbor_sets)}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._neighbor_sets == other._neighbor_sets

    def __hash__(self) -> int:
        return hash(self._neighbor_sets)

    def __repr__(self) -> str:
        return f'Graph(n={self.n}, edges={self.edge_count})'


class CycleFinder:
    """Exact-length cycle detection; `cap` bounds the lengths it agrees to search."""

    def __init__(self, cap: int = DEFAULT_CYCLE_CAP):
        if cap < 3:
            raise ValueError('cycle cap should be at least 3', cap)
        self._cap = cap

    @property
    def cap(self) -> int:
        return self._cap

    def has_cycle_of_length(self, graph: Graph, length: int) -> bool:
        return has_cycle_of_length(graph, length, cap=self._cap)

    def cycle_flags(self, graph: Graph, lengths: Iterable[int]) -> Dict[int, bool]:
        return {length: self.has_cycle_of_length(graph, length) for length in lengths}


def has_cycle_of_length(graph: Graph, length: int, cap: int = DEFAULT_CYCLE_CAP) -> bool:
    """
    Whether `graph` has a simple cycle on exactly `length` vertices.

    Exhaustive DFS rooted at the smallest vertex of the cycle, pruned by the distance back
    to the root.

    :raises CapExceeded
    """

    if length > cap:
        raise CapExceeded(length, cap)
    if length < 3:
        return False

    for root in range(graph.n):
        if _has_cycle_through_root(graph, root, length):
            logger.debug('found %d-cycle through vertex %d', length, root)
            return True

    return False


def _has_cycle_through_root(graph: Graph, root: int, length: int) -> bool:
    # only vertices above root may appear, so each cycle is searched from its minimum
    distance = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        if distance[u] >= length:
            continue
        for v in graph.neighbors(u):
            if v > root and v not in distance:
                distance[v] = distance[u] + 1
                queue.append(v)

    root_neighbors = graph.neighbor_set(root)
    path = [root]
    on_path = {root}

    def extend(u: int) -> bool:
        if len(path) == length:
            return u in root_neighbors

        for v in graph.neighbors(u):
            if v in on_path or v not in distance or v == root:
                continue
            # after adding v, length - len(path) - 1 vertices remain before closing
            if distance[v] > length - len(path):
                continue

            path.append(v)
            on_path.add(v)
            found = extend(v)
            path.pop()
            on_path.remove(v)
            if found:
                return True

        return False

    return extend(root)


def _check_simple(adjacency: Tuple[Tuple[int, ...], ...]) -> None:
    n = len(adjacency)
    neighbor_sets = [set(neighbors) for neighbors in adjacency]

    for v, neighbors in enumerate(adjacency):
        if len(neighbor_sets[v]) != len(neighbors):
            raise NotSimple(v, 'repeated neighbor')
        for u in neighbors:
            if not 0 <= u < n:
                raise InvalidVertex(u, n)
            if u == v:
                raise NotSimple(v, 'self-loop')
            if v not in neighbor_sets[u]:
                raise AsymmetricAdjacency(v, u)


class GraphError(ToruscolorError):
    pass


class AsymmetricAdjacency(GraphError):
    def __init__(self, u: int, v: int):
        self.u = u
        self.v = v

    def __str__(self) -> str:
        return f'Vertex {self.u} lists {self.v} as a neighbor, but not the other way around'


class NotSimple(GraphError):
    def __init__(self, v: int, reason: str):
        self.v = v
        self.reason = reason

    def __str__(self) -> str:
        return f'Graph is not simple at vertex {self.v}: {self.reason}'


class InvalidVertex(GraphError):
    def __init__(self, v: int, n: int):
        self.v = v
        self.n = n

    def __str__(self) -> str:
        return f'Vertex {self.v} is outside 0..{self.n - 1}'


class CapExceeded(GraphError):
    def __init__(self, length: int, cap: int):
        self.length = length
        self.cap = cap

    def __str__(self) -> str:
        return f'Cycle length {self.length} is above the configured cap {self.cap}'
