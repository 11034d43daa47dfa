import enum
from typing import NamedTuple


class ToruscolorError(Exception):
    pass


class HalfEdge(NamedTuple):
    tail: int
    head: int

    def twin(self) -> 'HalfEdge':
        return HalfEdge(self.head, self.tail)


@enum.unique
class ElementKind(enum.Enum):
    VERTEX = 'vertex'
    FACE = 'face'


class Element(NamedTuple):
    """Vertex or face of an embedded graph, the carriers of charge."""

    kind: ElementKind
    index: int

    def __str__(self) -> str:
        return f'{self.kind.value} {self.index}'


def vertex(index: int) -> Element:
    return Element(ElementKind.VERTEX, index)


def face(index: int) -> Element:
    return Element(ElementKind.FACE, index)


@enum.unique
class TriangleMode(str, enum.Enum):
    """
    How "adjacent triangles" are read.

    `CYCLES` - two 3-cycles sharing an edge (needs no embedding).
    `FACES` - two distinct 3-faces of the embedding sharing an edge.
    """

    CYCLES = 'cycles'
    FACES = 'faces'
