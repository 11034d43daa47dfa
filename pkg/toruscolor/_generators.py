"""Deterministic embedded test graphs."""
from typing import Dict, List, Tuple, Union

from toruscolor._embedding import EmbeddedGraph, build_embedded_graph
from toruscolor._formats import CorpusEntry, FormatError, Provenance
from toruscolor._graph import Graph

MAX_COMPLETE = 7

# neighbor offsets of the K7 torus triangulation, in rotation order
_K7_ROTATION_OFFSETS = (1, 3, 2, 6, 4, 5)


def _entry(name: str, embedded: EmbeddedGraph, generator: str, **params: object) -> CorpusEntry:
    rendered = tuple((key, _render_param(value)) for key, value in params.items())
    return CorpusEntry(name, embedded.graph, embedded, Provenance(generator, rendered))


def _render_param(value: object) -> str:
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return str(value)


def gen_torus_grid(m: int, n: int, diagonals: bool = False) -> CorpusEntry:
    """
    Cm x Cn on the torus; vertex (i, j) gets id `i * n + j`, rotation N, E, S, W.

    With `diagonals` each quad gets its southwest-northeast diagonal, splitting it into
    two triangles; the rotation becomes N, NE, E, S, SW, W.

    :raises ParameterTooSmall
    """

    for name, value in (('m', m), ('n', n)):
        if value < 3:
            raise ParameterTooSmall(name, value, 3)

    def vid(i: int, j: int) -> int:
        return (i % m) * n + (j % n)

    rotation = []
    for i in range(m):
        for j in range(n):
            north, east, south, west = vid(i - 1, j), vid(i, j + 1), vid(i + 1, j), vid(i, j - 1)
            if diagonals:
                rotation.append([north, vid(i - 1, j + 1), east, south, vid(i + 1, j - 1), west])
            else:
                rotation.append([north, east, south, west])

    name = f'grid{m}x{n}' + ('-diag' if diagonals else '')
    embedded = build_embedded_graph(Graph(rotation), rotation)
    return _entry(name, embedded, 'grid', m=m, n=n, diagonals=diagonals)


def gen_subdivision(base: Union[Graph, CorpusEntry], k: int) -> CorpusEntry:
    """
    Replace every edge by a path with `k` internal vertices.

    Original vertices keep their ids; the internal vertices of the i-th edge `(a, b)`
    (ascending order, `a < b`) get ids `n + i*k .. n + i*k + k - 1`, running from a to b.
    An embedding, if present, carries over: originals keep their rotation with each
    neighbor replaced by the adjacent path vertex.

    :raises ParameterTooSmall
    """

    if k < 1:
        raise ParameterTooSmall('k', k, 1)

    if isinstance(base, CorpusEntry):
        graph, embedding, base_name = base.graph, base.embedding, base.name
    else:
        graph, embedding, base_name = base, None, f'graph{base.n}v{base.edge_count}e'

    n = graph.n
    edges = list(graph.edges())
    toward: Dict[Tuple[int, int], int] = {}  # (original, neighbor) -> first path vertex
    rotation: List[List[int]] = [[] for _ in range(n + len(edges) * k)]

    for index, (a, b) in enumerate(edges):
        path = [a] + [n + index * k + t for t in range(k)] + [b]
        toward[a, b] = path[1]
        toward[b, a] = path[-2]
        for position in range(1, k + 1):
            rotation[path[position]] = [path[position - 1], path[position + 1]]

    source_order = embedding.rotation if embedding is not None else graph.adjacency
    for v in range(n):
        rotation[v] = [toward[v, u] for u in source_order[v]]

    new_graph = Graph(rotation)
    name = f'{base_name}-sub{k}'
    provenance = Provenance('subdivision', (('base', base_name), ('k', str(k))))
    if embedding is None:
        return CorpusEntry(name, new_graph, None, provenance)

    return CorpusEntry(name, new_graph, build_embedded_graph(new_graph, rotation), provenance)


def gen_complete(n: int) -> CorpusEntry:
    """
    K_n for `n <= 7`, embedded as the restriction of the K7 torus triangulation.

    Deleting vertices never raises the genus, so the result has genus at most 1.

    :raises ParameterOutOfRange
    """

    if not 1 <= n <= MAX_COMPLETE:
        raise ParameterOutOfRange('n', n, 1, MAX_COMPLETE)

    rotation = [
        [(v + offset) % 7 for offset in _K7_ROTATION_OFFSETS if (v + offset) % 7 < n]
        for v in range(n)
    ]
    embedded = build_embedded_graph(Graph(rotation), rotation)
    return _entry(f'K{n}', embedded, 'complete', n=n)


def gen_cycle(n: int) -> CorpusEntry:
    """C_n in the plane."""

    if n < 3:
        raise ParameterTooSmall('n', n, 3)

    rotation = [[(v - 1) % n, (v + 1) % n] for v in range(n)]
    embedded = build_embedded_graph(Graph(rotation), rotation)
    return _entry(f'C{n}', embedded, 'cycle', n=n)


class ParameterOutOfRange(FormatError):
    def __init__(self, name: str, value: int, minimum: int, maximum: int):
        self.name = name
        self.value = value
        self.minimum = minimum
        self.maximum = maximum

    def __str__(self) -> str:
        return f'Parameter {self.name}={self.value} is outside {self.minimum}..{self.maximum}'


class ParameterTooSmall(FormatError):
    def __init__(self, name: str, value: int, minimum: int):
        self.name = name
        self.value = value
        self.minimum = minimum

    def __str__(self) -> str:
        return f'Parameter {self.name}={self.value} is below the minimum {self.minimum}'
