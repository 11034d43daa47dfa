from typing import Optional, Sequence, Tuple

from toruscolor._faces import FaceSet, _trace
from toruscolor._graph import Graph, GraphError
from toruscolor._types import TriangleMode


class EmbeddedGraph:
    """
    Graph with a rotation system (cyclic order of neighbors at every vertex).

    Faces, components and genus are computed once, at construction.
    """

    def __init__(self, graph: Graph, rotation: Sequence[Sequence[int]]):
        self._graph = graph
        self._rotation: Tuple[Tuple[int, ...], ...] = tuple(tuple(order) for order in rotation)
        self._faces = _trace(self._rotation)
        self._components = len(graph.components())

        # V - E + F = 2c - 2g, summed over the components
        doubled = 2 * self._components - graph.n + graph.edge_count - len(self._faces)
        if doubled % 2 or doubled < 0:
            raise RuntimeError('internal error - Euler characteristic has wrong parity', doubled)
        self._genus = doubled // 2

    @property
    def graph(self) -> Graph:
        return self._graph

    @property
    def rotation(self) -> Tuple[Tuple[int, ...], ...]:
        return self._rotation

    @property
    def faces(self) -> FaceSet:
        return self._faces

    @property
    def genus(self) -> int:
        return self._genus

    @property
    def components(self) -> int:
        return self._components

    @property
    def euler_characteristic(self) -> int:
        return self._graph.n - self._graph.edge_count + len(self._faces)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EmbeddedGraph):
            return NotImplemented
        return self._graph == other._graph and self._rotation == other._rotation

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f'EmbeddedGraph(n={self._graph.n}, edges={self._graph.edge_count},'
            f' faces={len(self._faces)}, genus={self._genus})'
        )


def build_embedded_graph(graph: Graph, rotation: Sequence[Sequence[int]]) -> EmbeddedGraph:
    """
    :raises NonPermutationRotation
    """

    if len(rotation) != graph.n:
        raise NonPermutationRotation(min(len(rotation), graph.n), 'rotation vertex count differs')

    for v, order in enumerate(rotation):
        if len(order) != graph.degree(v) or set(order) != graph.neighbor_set(v):
            raise NonPermutationRotation(v, f'{list(order)} vs neighbors {sorted(graph.neighbor_set(v))}')

    return EmbeddedGraph(graph, rotation)


def embed_rotation(rotation: Sequence[Sequence[int]]) -> EmbeddedGraph:
    """Embedding whose abstract graph is read off the rotation itself."""

    return build_embedded_graph(Graph(rotation), rotation)


def adjacent_triangles_present(
        graph: Graph,
        embedded: Optional[EmbeddedGraph] = None,
        mode: TriangleMode = TriangleMode.CYCLES,
) -> bool:
    """
    :raises EmbeddingRequired
    """

    if mode == TriangleMode.CYCLES:
        return any(
            len(graph.neighbor_set(u) & graph.neighbor_set(v)) >= 2
            for u, v in graph.edges()
        )

    if embedded is None:
        raise EmbeddingRequired('adjacent triangles in faces mode')

    faces = embedded.faces
    for u, v in graph.edges():
        f, g = faces.edge_sides(u, v)
        if f == g or faces.degree(f) != 3 or faces.degree(g) != 3:
            continue
        # the two sides of a lone triangle on the sphere are the same triangle
        if set(faces[f].corners) != set(faces[g].corners):
            return True

    return False


class NonPermutationRotation(GraphError):
    def __init__(self, v: int, detail: str):
        self.v = v
        self.detail = detail

    def __str__(self) -> str:
        return f'Rotation at vertex {self.v} is not a permutation of its incident edges: {self.detail}'


class EmbeddingRequired(GraphError):
    def __init__(self, operation: str):
        self.operation = operation

    def __str__(self) -> str:
        return f'An embedding is required for {self.operation}'
