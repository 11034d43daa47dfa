import enum
import itertools
import logging
import random
from types import MappingProxyType
from typing import (
    AbstractSet, Dict, FrozenSet, Iterable, Iterator, List, Mapping, NamedTuple, Tuple, Union,
)

from toruscolor._graph import Graph
from toruscolor._structures import Configuration, ConfigurationKind, iter_configurations
from toruscolor._types import ToruscolorError

logger = logging.getLogger(__name__)

CONSTRUCTIVE_LIST_SIZE = 3
CONSTRUCTIVE_IMPROPRIETY = 1


class ListAssignment:
    """
    Color list per vertex.

    :param floor: the least list size every vertex is promised (0 for residual lists)
    :raises ListTooSmall
    """

    def __init__(self, lists: Mapping[int, Iterable[int]], floor: int = 0):
        self._lists: Mapping[int, FrozenSet[int]] = MappingProxyType({
            v: frozenset(lists[v]) for v in sorted(lists)
        })
        self._floor = floor

        for v, colors in self._lists.items():
            if len(colors) < floor:
                raise ListTooSmall(v, len(colors), floor)

    @classmethod
    def constant(cls, n: int, colors: Iterable[int], floor: int = 0) -> 'ListAssignment':
        colors = frozenset(colors)
        return cls({v: colors for v in range(n)}, floor)

    @property
    def lists(self) -> Mapping[int, FrozenSet[int]]:
        return self._lists

    @property
    def floor(self) -> int:
        return self._floor

    def __getitem__(self, v: int) -> FrozenSet[int]:
        return self._lists[v]

    def __contains__(self, v: object) -> bool:
        return v in self._lists

    def __iter__(self) -> Iterator[int]:
        return iter(self._lists)

    def __len__(self) -> int:
        return len(self._lists)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ListAssignment):
            return NotImplemented
        return dict(self._lists) == dict(other._lists)

    def min_size(self) -> int:
        return min((len(colors) for colors in self._lists.values()), default=0)

    def restrict(self, vertices: Iterable[int]) -> 'ListAssignment':
        return ListAssignment({v: self._lists[v] for v in vertices})

    def __repr__(self) -> str:
        return f'ListAssignment({len(self._lists)} vertices, floor={self._floor})'


class DefectiveColoring(NamedTuple):
    colors: Mapping[int, int]
    impropriety: int


class RandomListGenerator:
    """Seeded random lists of `size` colors drawn from `1..palette`."""

    def __init__(self, size: int = CONSTRUCTIVE_LIST_SIZE, palette: int = 5):
        if not 0 < size <= palette:
            raise ValueError('list size should be within 1..palette', size, palette)
        self._size = size
        self._palette = palette

    def generate(self, graph: Graph, seed: int) -> ListAssignment:
        rng = random.Random(seed)
        colors = range(1, self._palette + 1)
        return ListAssignment(
            {v: rng.sample(colors, self._size) for v in range(graph.n)},
            floor=self._size,
        )


@enum.unique
class ViolationKind(enum.Enum):
    UNCOLORED = 'uncolored'
    OFF_LIST = 'off-list'
    DEFECT = 'defect'


class Violation(NamedTuple):
    vertex: int
    kind: ViolationKind
    detail: int  # the color for off-list choices, the same-color neighbor count for defects


class Verdict(NamedTuple):
    violations: Tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_coloring(
        graph: Graph, lists: ListAssignment, coloring: DefectiveColoring, d: int,
) -> Verdict:
    violations = []
    colors = coloring.colors

    for v in range(graph.n):
        color = colors.get(v)
        if color is None:
            violations.append(Violation(v, ViolationKind.UNCOLORED, 0))
            continue

        if v not in lists or color not in lists[v]:
            violations.append(Violation(v, ViolationKind.OFF_LIST, color))

        defect = sum(1 for u in graph.neighbors(v) if colors.get(u) == color)
        if defect > d:
            violations.append(Violation(v, ViolationKind.DEFECT, defect))

    return Verdict(tuple(violations))


_guarantees: Mapping[ConfigurationKind, Tuple[int, ...]] = {
    ConfigurationKind.SMALL_VERTEX: (1,),
    ConfigurationKind.ADJACENT_THREES: (1, 1),
    ConfigurationKind.FACE_344: (2, 1, 1),
    ConfigurationKind.FACE_3434: (2, 1, 2, 1),
}


def extend_configuration(
        config: Configuration,
        residual: ListAssignment,
        local_edges: Mapping[int, AbstractSet[int]],
) -> Dict[int, int]:
    """
    Color the witness of `config` from residual lists, keeping every witness vertex at
    most one same-colored neighbor inside the witness. Residual lists already exclude the
    colors of colored outside neighbors, so no defect crosses the boundary.

    Ties take the smallest color.

    :raises GuaranteeViolated
    :raises ExtensionFailed
    """

    witness = config.witness
    for v, minimum in zip(witness, _guarantees[config.kind]):
        if len(residual[v]) < minimum:
            raise GuaranteeViolated(config, v, len(residual[v]), minimum)

    if config.kind == ConfigurationKind.SMALL_VERTEX:
        v, = witness
        colors = {v: min(residual[v])}

    elif config.kind == ConfigurationKind.ADJACENT_THREES:
        colors = {v: min(residual[v]) for v in witness}

    elif config.kind == ConfigurationKind.FACE_344:
        colors = _extend_344(witness, residual)

    else:
        colors = _extend_exhaustively(witness, residual, local_edges)

    if not _locally_proper(colors, local_edges):
        raise ExtensionFailed(config, residual)

    return colors


def _extend_344(witness: Tuple[int, ...], residual: ListAssignment) -> Dict[int, int]:
    x, y, z = witness
    list_y, list_z = residual[y], residual[z]

    if list_y == list_z:
        # y and z share one color, x avoids it
        gamma = min(list_y)
        return {x: min(residual[x] - {gamma}), y: gamma, z: gamma}

    if list_y - list_z:
        # y's color is unavailable to z, so y and z differ and x clashes with at most one
        color_y = min(list_y - list_z)
        return {x: min(residual[x]), y: color_y, z: min(list_z)}

    color_z = min(list_z - list_y)
    return {x: min(residual[x]), y: min(list_y), z: color_z}


def _extend_exhaustively(
        witness: Tuple[int, ...],
        residual: ListAssignment,
        local_edges: Mapping[int, AbstractSet[int]],
) -> Dict[int, int]:
    for choice in itertools.product(*(sorted(residual[v]) for v in witness)):
        colors = dict(zip(witness, choice))
        if _locally_proper(colors, local_edges):
            return colors

    return {}


def _locally_proper(colors: Mapping[int, int], local_edges: Mapping[int, AbstractSet[int]]) -> bool:
    if not colors:
        return False

    return all(
        sum(1 for u in local_edges.get(v, ()) if colors.get(u) == color) <= CONSTRUCTIVE_IMPROPRIETY
        for v, color in colors.items()
    )


class ReductionPlan(NamedTuple):
    """Configurations in peeling order and whatever could not be peeled."""

    configurations: Tuple[Configuration, ...]
    remainder: Tuple[int, ...]

    @property
    def stuck(self) -> bool:
        return bool(self.remainder)


class ReductionStep(NamedTuple):
    configuration: Configuration
    deleted: Tuple[int, ...]
    residual: Mapping[int, FrozenSet[int]]


class ReductionTrace(NamedTuple):
    steps: Tuple[ReductionStep, ...]
    remainder: Tuple[int, ...] = ()


class ReductionOutcome(NamedTuple):
    coloring: DefectiveColoring
    trace: ReductionTrace


class StuckReport(NamedTuple):
    """A nonempty remainder with no configuration: the input lies outside the class."""

    remainder: Tuple[int, ...]
    peeled: Tuple[Configuration, ...]


def plan_reduction(graph: Graph) -> ReductionPlan:
    """Peel configurations until none is left; the peeling never looks at lists."""

    adjacency = graph.adjacency_sets()
    configurations = []

    while adjacency:
        config = next(iter_configurations(adjacency), None)
        if config is None:
            break

        configurations.append(config)
        for v in config.witness:
            for u in adjacency.pop(v):
                if u in adjacency:
                    adjacency[u].discard(v)

    remainder = tuple(sorted(adjacency))
    logger.debug('peeled %d configurations, %d vertices left', len(configurations), len(remainder))

    return ReductionPlan(tuple(configurations), remainder)


def color_from_plan(
        graph: Graph, plan: ReductionPlan, lists: ListAssignment,
) -> Union[ReductionOutcome, StuckReport]:
    """
    Replay the peeled configurations last-to-first, extending the coloring each time.

    :raises ListTooSmall
    """

    for v in range(graph.n):
        size = len(lists[v]) if v in lists else 0
        if size < CONSTRUCTIVE_LIST_SIZE:
            raise ListTooSmall(v, size, CONSTRUCTIVE_LIST_SIZE)

    if plan.stuck:
        return StuckReport(plan.remainder, plan.configurations)

    colors: Dict[int, int] = {}
    steps: List[ReductionStep] = []
    for config in reversed(plan.configurations):
        witness = set(config.witness)
        residual = ListAssignment({
            w: lists[w] - {colors[u] for u in graph.neighbors(w) if u in colors}
            for w in config.witness
        })
        local_edges = {w: graph.neighbors_in(w, witness) for w in config.witness}

        colors.update(extend_configuration(config, residual, local_edges))
        steps.append(ReductionStep(config, config.witness, residual.lists))

    coloring = DefectiveColoring(MappingProxyType(dict(sorted(colors.items()))), CONSTRUCTIVE_IMPROPRIETY)
    verdict = verify_coloring(graph, lists, coloring, CONSTRUCTIVE_IMPROPRIETY)
    if not verdict.ok:
        raise RuntimeError('internal error - reduction produced an invalid coloring', verdict.violations)

    return ReductionOutcome(coloring, ReductionTrace(tuple(reversed(steps))))


def reduce_and_color(graph: Graph, lists: ListAssignment) -> Union[ReductionOutcome, StuckReport]:
    """
    :raises ListTooSmall
    """

    return color_from_plan(graph, plan_reduction(graph), lists)


class ColoringError(ToruscolorError):
    pass


class ListTooSmall(ColoringError):
    def __init__(self, v: int, size: int, minimum: int):
        self.v = v
        self.size = size
        self.minimum = minimum

    def __str__(self) -> str:
        return f'List of vertex {self.v} has {self.size} colors, at least {self.minimum} required'


class GuaranteeViolated(ColoringError):
    def __init__(self, config: Configuration, v: int, size: int, minimum: int):
        self.config = config
        self.v = v
        self.size = size
        self.minimum = minimum

    def __str__(self) -> str:
        return (
            f'Residual list of vertex {self.v} in {self.config.kind.value} {self.config.witness}'
            f' has {self.size} colors, the extension needs {self.minimum}'
        )


class ExtensionFailed(ColoringError):
    def __init__(self, config: Configuration, residual: ListAssignment):
        self.config = config
        self.residual = residual

    def __str__(self) -> str:
        lists = {v: sorted(colors) for v, colors in self.residual.lists.items()}
        return f'No extension of {self.config.kind.value} {self.config.witness} from {lists}'
