import enum
import itertools
import logging
from typing import (
    AbstractSet, Dict, FrozenSet, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple,
    Union,
)

from toruscolor._embedding import EmbeddedGraph, adjacent_triangles_present
from toruscolor._graph import CycleFinder, Graph
from toruscolor._types import TriangleMode

logger = logging.getLogger(__name__)

CLASS_CYCLE_LENGTHS = (5, 6, 7)
OPTIONAL_CYCLE_LENGTHS = frozenset({5, 7})


class ClassReport(NamedTuple):
    in_class: bool
    genus_ok: bool
    genus: int
    min_degree: int
    adjacent_triangles: bool
    cycle_flags: Mapping[int, bool]
    qualifying_l: FrozenSet[int]


class ClassChecker:
    """Decides membership in the class of toroidal graphs the reduction argument covers."""

    def __init__(self, cycle_finder: CycleFinder, triangle_mode: TriangleMode = TriangleMode.CYCLES):
        self._cycle_finder = cycle_finder
        self._triangle_mode = triangle_mode

    @property
    def triangle_mode(self) -> TriangleMode:
        return self._triangle_mode

    def check(self, embedded: EmbeddedGraph) -> ClassReport:
        graph = embedded.graph
        genus_ok = embedded.genus in (0, 1)
        adjacent = adjacent_triangles_present(graph, embedded, self._triangle_mode)
        flags = self._cycle_finder.cycle_flags(graph, CLASS_CYCLE_LENGTHS)
        qualifying = frozenset(length for length in OPTIONAL_CYCLE_LENGTHS if not flags[length])

        return ClassReport(
            in_class=genus_ok and not adjacent and not flags[6] and bool(qualifying),
            genus_ok=genus_ok,
            genus=embedded.genus,
            min_degree=graph.min_degree(),
            adjacent_triangles=adjacent,
            cycle_flags=flags,
            qualifying_l=qualifying,
        )


def class_membership(
        embedded: EmbeddedGraph,
        triangle_mode: TriangleMode = TriangleMode.CYCLES,
) -> ClassReport:
    return ClassChecker(CycleFinder(), triangle_mode).check(embedded)


@enum.unique
class ConfigurationKind(enum.Enum):
    """
    Reducible configurations, in the order they are searched for.

    `SMALL_VERTEX` - a vertex of degree at most 2.
    `ADJACENT_THREES` - two adjacent vertices of degree 3.
    `FACE_344` - a triangle whose vertices have degrees 3, 4, 4.
    `FACE_3434` - a 4-cycle whose vertices have degrees 3, 4, 3, 4 in cyclic order.
    """

    SMALL_VERTEX = 'small-vertex'
    ADJACENT_THREES = 'adjacent-threes'
    FACE_344 = 'face-344'
    FACE_3434 = 'face-3434'


class Configuration(NamedTuple):
    kind: ConfigurationKind
    witness: Tuple[int, ...]
    face_id: Optional[int] = None


class NotFound:
    """No reducible configuration exists in the scanned graph."""

    def __repr__(self) -> str:
        return 'NOT_FOUND'

    def __bool__(self) -> bool:
        return False


NOT_FOUND = NotFound()


def find_reducible_configuration(
        graph: Graph, embedded: Optional[EmbeddedGraph] = None,
) -> Union[Configuration, NotFound]:
    config = next(iter_configurations(graph.adjacency_sets()), None)
    if config is None:
        return NOT_FOUND

    return _with_face(config, embedded)


def find_all_configurations(
        graph: Graph, embedded: Optional[EmbeddedGraph] = None,
) -> List[Configuration]:
    return [
        _with_face(config, embedded)
        for config in iter_configurations(graph.adjacency_sets())
    ]


def iter_configurations(adjacency: Mapping[int, AbstractSet[int]]) -> Iterator[Configuration]:
    """
    All configurations of the graph given as `vertex -> neighbor set`, kind by kind,
    each kind ordered by lowest witness ids.
    """

    degree = {v: len(neighbors) for v, neighbors in adjacency.items()}
    order = sorted(adjacency)
    threes = [v for v in order if degree[v] == 3]

    for v in order:
        if degree[v] <= 2:
            yield Configuration(ConfigurationKind.SMALL_VERTEX, (v,))

    for u in threes:
        for v in sorted(adjacency[u]):
            if v > u and degree[v] == 3:
                yield Configuration(ConfigurationKind.ADJACENT_THREES, (u, v))

    for x in threes:
        fours = sorted(w for w in adjacency[x] if degree[w] == 4)
        for y, z in itertools.combinations(fours, 2):
            if z in adjacency[y]:
                yield Configuration(ConfigurationKind.FACE_344, (x, y, z))

    for x in threes:
        fours = sorted(w for w in adjacency[x] if degree[w] == 4)
        for y, u in itertools.combinations(fours, 2):
            for z in sorted(adjacency[y] & adjacency[u]):
                # each 4-cycle is reported from its smaller 3-vertex
                if z > x and degree[z] == 3:
                    yield Configuration(ConfigurationKind.FACE_3434, (x, y, z, u))


def configuration_holds(adjacency: Mapping[int, AbstractSet[int]], config: Configuration) -> bool:
    """Re-check a configuration against its degree and adjacency pattern."""

    witness = config.witness
    degree = {v: len(adjacency[v]) for v in witness}

    if config.kind == ConfigurationKind.SMALL_VERTEX:
        v, = witness
        return degree[v] <= 2

    if config.kind == ConfigurationKind.ADJACENT_THREES:
        u, v = witness
        return degree[u] == degree[v] == 3 and v in adjacency[u]

    pattern = (3, 4, 4) if config.kind == ConfigurationKind.FACE_344 else (3, 4, 3, 4)
    if len(witness) != len(pattern) or len(set(witness)) != len(witness):
        return False
    cyclic_edges = all(
        witness[(i + 1) % len(witness)] in adjacency[witness[i]]
        for i in range(len(witness))
    )
    return cyclic_edges and tuple(degree[v] for v in witness) == pattern


def _with_face(config: Configuration, embedded: Optional[EmbeddedGraph]) -> Configuration:
    if embedded is None or config.kind not in (ConfigurationKind.FACE_344, ConfigurationKind.FACE_3434):
        return config

    witness = list(config.witness)
    for face in embedded.faces.faces:
        if face.degree == len(witness) and _same_cycle(face.corners, witness):
            return config._replace(face_id=face.index)

    return config


def _same_cycle(corners: Sequence[int], witness: Sequence[int]) -> bool:
    if set(corners) != set(witness) or len(corners) != len(witness):
        return False

    for sequence in (list(corners), list(reversed(corners))):
        start = sequence.index(witness[0])
        if sequence[start:] + sequence[:start] == list(witness):
            return True

    return False


class Witness(NamedTuple):
    """Where an observation fails: `kind` is `face` (one face id) or `edge` (`u < v`)."""

    kind: str
    items: Tuple[int, ...]

    def __str__(self) -> str:
        return f'{self.kind} ' + ','.join(str(item) for item in self.items)


class ObservationResult(NamedTuple):
    name: str
    passed: bool
    witness: Optional[Witness] = None


class ObservationReport(NamedTuple):
    case: int
    results: Tuple[ObservationResult, ...]

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)


def verify_observations(embedded: EmbeddedGraph, case: int) -> ObservationReport:
    """Structural facts the discharging argument of each case relies on, checked on the faces."""

    if case == 1:
        checks = (('small-face-spacing', _small_face_spacing),)
    elif case == 2:
        checks = (
            ('face-size-gaps', _face_size_gaps),
            ('pentagon-isolation', _pentagon_isolation),
            ('triangle-quad-pairing', _triangle_quad_pairing),
        )
    else:
        raise ValueError('case should be 1 or 2', case)

    results = []
    for name, check in checks:
        witness = check(embedded)
        results.append(ObservationResult(name, witness is None, witness))

    return ObservationReport(case, tuple(results))


def _edge_sides(embedded: EmbeddedGraph) -> Iterator[Tuple[Tuple[int, int], int, int]]:
    faces = embedded.faces
    for u, v in embedded.graph.edges():
        f, g = faces.edge_sides(u, v)
        yield (u, v), faces.degree(f), faces.degree(g)


def _face_with_degree(embedded: EmbeddedGraph, degrees: AbstractSet[int]) -> Optional[Witness]:
    for face in embedded.faces.faces:
        if face.walk and face.degree in degrees:
            return Witness('face', (face.index,))
    return None


def _small_face_spacing(embedded: EmbeddedGraph) -> Optional[Witness]:
    # no 5- or 6-faces, and no edge with 4^- faces on both sides
    witness = _face_with_degree(embedded, {5, 6})
    if witness is not None:
        return witness

    for edge, left, right in _edge_sides(embedded):
        if left <= 4 and right <= 4:
            return Witness('edge', edge)
    return None


def _face_size_gaps(embedded: EmbeddedGraph) -> Optional[Witness]:
    # no 6- or 7-faces, no adjacent 3-faces, no adjacent 4-faces
    witness = _face_with_degree(embedded, {6, 7})
    if witness is not None:
        return witness

    for edge, left, right in _edge_sides(embedded):
        if left == right and left in (3, 4):
            return Witness('edge', edge)
    return None


def _pentagon_isolation(embedded: EmbeddedGraph) -> Optional[Witness]:
    for edge, left, right in _edge_sides(embedded):
        if {left, right} in ({5, 3}, {5, 4}):
            return Witness('edge', edge)
    return None


def _triangle_quad_pairing(embedded: EmbeddedGraph) -> Optional[Witness]:
    # shared edges are counted, so a triangle touching one quad twice fails too
    faces = embedded.faces
    for face in faces.faces:
        if face.degree not in (3, 4):
            continue

        other_degree = 7 - face.degree
        shared = sum(
            multiplicity
            for neighbor, multiplicity in faces.adjacent_faces(face.index)
            if neighbor != face.index and faces.degree(neighbor) == other_degree
        )
        if shared > 1:
            return Witness('face', (face.index,))

    return None


class IncidenceCounts(NamedTuple):
    r_v: int
    r1: int
    r2: int


def incidence_counts(embedded: EmbeddedGraph, v: int) -> IncidenceCounts:
    """Small faces at the corners of `v`, a face met several times counted each time."""

    faces = embedded.faces
    degrees = [faces.degree(f) for f in faces.incidences(v) if faces[f].walk]

    return IncidenceCounts(
        r_v=sum(1 for d in degrees if d in (3, 4)),
        r1=sum(1 for d in degrees if d <= 4),
        r2=sum(1 for d in degrees if d == 5),
    )


def incidence_bounds_hold(k: int, counts: IncidenceCounts, case: int) -> bool:
    if case == 1:
        return counts.r_v <= k // 2
    if case == 2:
        return counts.r1 <= 2 * k // 3 and 3 * -(-counts.r1 // 2) + counts.r2 <= k + 1
    raise ValueError('case should be 1 or 2', case)


def incidence_bound_violations(embedded: EmbeddedGraph, case: int) -> List[int]:
    graph = embedded.graph
    return [
        v for v in range(graph.n)
        if not incidence_bounds_hold(graph.degree(v), incidence_counts(embedded, v), case)
    ]


def configuration_counts(configs: Sequence[Configuration]) -> Dict[ConfigurationKind, int]:
    counts = {kind: 0 for kind in ConfigurationKind}
    for config in configs:
        counts[config.kind] += 1
    return counts
