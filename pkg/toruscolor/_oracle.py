import logging
from concurrent.futures import ProcessPoolExecutor
from types import MappingProxyType
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from toruscolor._coloring import ColoringError, DefectiveColoring, ListAssignment
from toruscolor._graph import Graph

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10 ** 8


class Unsatisfiable(NamedTuple):
    """Exhaustion proof: the whole search tree was explored without a coloring."""

    nodes: int


class OracleSolver:
    """
    Exhaustive (L, d)-coloring search in degeneracy order, colors tried smallest first.

    The witness is the lexicographically least coloring along the search order. With
    `workers > 1` the colors of the first vertex are explored in separate processes, each
    with its own node budget; the verdict and the witness are the same as in a serial run.
    """

    def __init__(self, node_budget: int = DEFAULT_NODE_BUDGET, workers: int = 1):
        if node_budget < 1 or workers < 1:
            raise ValueError('node budget and workers should be positive', node_budget, workers)
        self._node_budget = node_budget
        self._workers = workers

    @property
    def node_budget(self) -> int:
        return self._node_budget

    def solve(
            self, graph: Graph, lists: ListAssignment, d: int,
    ) -> Union[DefectiveColoring, Unsatisfiable]:
        """
        :raises BudgetExceeded
        """

        order = search_order(graph)
        adjacency = [tuple(graph.neighbors(v)) for v in range(graph.n)]
        candidates = [tuple(sorted(lists[v])) if v in lists else () for v in range(graph.n)]

        if self._workers == 1 or not order:
            found, nodes = _search(adjacency, candidates, order, d, self._node_budget, ())
            return _result(found, nodes, order, d)

        root = order[0]
        tasks = [
            (adjacency, candidates, order, d, self._node_budget, (color,))
            for color in candidates[root]
        ]
        with ProcessPoolExecutor(max_workers=self._workers) as executor:
            branches = list(executor.map(_search_task, tasks))

        total = 0
        for found, nodes in branches:
            total += nodes
            if found is not None:
                return _result(found, total, order, d)

        return Unsatisfiable(total)


def oracle_solve(
        graph: Graph, lists: ListAssignment, d: int,
        node_budget: int = DEFAULT_NODE_BUDGET, workers: int = 1,
) -> Union[DefectiveColoring, Unsatisfiable]:
    """
    :raises BudgetExceeded
    """

    return OracleSolver(node_budget, workers).solve(graph, lists, d)


def search_order(graph: Graph) -> List[int]:
    """Reverse degeneracy order: repeatedly strip a minimum-degree vertex (lowest id first)."""

    degree = {v: graph.degree(v) for v in range(graph.n)}
    removed: List[int] = []
    alive = set(degree)
    while alive:
        v = min(alive, key=lambda u: (degree[u], u))
        alive.remove(v)
        removed.append(v)
        for u in graph.neighbors(v):
            if u in alive:
                degree[u] -= 1

    return removed[::-1]


def _result(
        found: Optional[Tuple[int, ...]], nodes: int, order: Sequence[int], d: int,
) -> Union[DefectiveColoring, Unsatisfiable]:
    logger.debug('oracle explored %d nodes', nodes)
    if found is None:
        return Unsatisfiable(nodes)

    colors = dict(sorted(zip(order, found)))
    return DefectiveColoring(MappingProxyType(colors), d)


def _search_task(args: tuple) -> Tuple[Optional[Tuple[int, ...]], int]:
    return _search(*args)


def _search(
        adjacency: Sequence[Sequence[int]],
        candidates: Sequence[Sequence[int]],
        order: Sequence[int],
        d: int,
        budget: int,
        prefix: Tuple[int, ...],
) -> Tuple[Optional[Tuple[int, ...]], int]:
    colors: Dict[int, int] = {}
    same = [0] * len(adjacency)  # same-colored colored neighbors of each colored vertex
    chosen: List[int] = []
    nodes = 0

    def assign(v: int, color: int) -> Optional[List[int]]:
        clashes = [u for u in adjacency[v] if colors.get(u) == color]
        if len(clashes) > d or any(same[u] >= d for u in clashes):
            return None

        colors[v] = color
        same[v] = len(clashes)
        for u in clashes:
            same[u] += 1
        return clashes

    def unassign(v: int, clashes: List[int]) -> None:
        del colors[v]
        same[v] = 0
        for u in clashes:
            same[u] -= 1

    def descend(depth: int) -> bool:
        nonlocal nodes
        if depth == len(order):
            return True

        v = order[depth]
        options = (prefix[depth],) if depth < len(prefix) else candidates[v]
        for color in options:
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(budget)

            clashes = assign(v, color)
            if clashes is None:
                continue

            chosen.append(color)
            if descend(depth + 1):
                return True
            chosen.pop()
            unassign(v, clashes)

        return False

    if descend(0):
        return tuple(chosen), nodes
    return None, nodes


class BudgetExceeded(ColoringError):
    def __init__(self, budget: int):
        super().__init__(budget)  # keeps it picklable across worker processes
        self.budget = budget

    def __str__(self) -> str:
        return f'Search exceeded its budget of {self.budget} nodes'
