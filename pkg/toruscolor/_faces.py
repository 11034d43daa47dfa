from collections import Counter
from typing import Dict, List, Mapping, NamedTuple, Sequence, Tuple

from toruscolor._types import HalfEdge


class Face(NamedTuple):
    """
    One face of an embedding.

    `walk` is the closed boundary walk; `corners` are the tails of its half-edges, i.e. the
    boundary vertices in order, repeated when the walk passes a vertex several times.
    An isolated vertex owns a face with an empty walk and a single corner.
    """

    index: int
    walk: Tuple[HalfEdge, ...]
    corners: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.walk)


class FaceSet:
    def __init__(self, faces: Sequence[Face], incidences: Sequence[Tuple[int, ...]]):
        self._faces = tuple(faces)
        self._incidences = tuple(incidences)
        self._face_of: Dict[HalfEdge, int] = {
            half_edge: face.index
            for face in self._faces
            for half_edge in face.walk
        }

        adjacency: Counter = Counter()
        for half_edge, index in self._face_of.items():
            if half_edge.tail < half_edge.head:
                other = self._face_of[half_edge.twin()]
                adjacency[min(index, other), max(index, other)] += 1
        self._adjacency: Dict[Tuple[int, int], int] = dict(adjacency)

        neighbors: Dict[int, List[Tuple[int, int]]] = {face.index: [] for face in self._faces}
        for (f, g), multiplicity in sorted(self._adjacency.items()):
            neighbors[f].append((g, multiplicity))
            if f != g:
                neighbors[g].append((f, multiplicity))
        self._neighbors = {
            index: tuple(sorted(items)) for index, items in neighbors.items()
        }

    @property
    def faces(self) -> Tuple[Face, ...]:
        return self._faces

    @property
    def adjacency(self) -> Mapping[Tuple[int, int], int]:
        """`(f, g) -> number of edges with f on one side and g on the other`, with `f <= g`."""

        return self._adjacency

    def __len__(self) -> int:
        return len(self._faces)

    def __getitem__(self, index: int) -> Face:
        return self._faces[index]

    def degree(self, index: int) -> int:
        return self._faces[index].degree

    def degree_sum(self) -> int:
        return sum(face.degree for face in self._faces)

    def face_of(self, half_edge: HalfEdge) -> int:
        return self._face_of[half_edge]

    def edge_sides(self, u: int, v: int) -> Tuple[int, int]:
        return self._face_of[HalfEdge(u, v)], self._face_of[HalfEdge(v, u)]

    def multiplicity(self, f: int, g: int) -> int:
        return self._adjacency.get((min(f, g), max(f, g)), 0)

    def adjacent_faces(self, index: int) -> Tuple[Tuple[int, int], ...]:
        """`(face, shared edge count)` pairs, ascending; includes `index` itself if it borders itself."""

        return self._neighbors[index]

    def incidences(self, v: int) -> Tuple[int, ...]:
        """Faces at the corners of `v`, in rotation order, with multiplicity."""

        return self._incidences[v]


def trace_faces(embedded) -> FaceSet:
    """Faces of an `EmbeddedGraph` (traced once at construction)."""

    return embedded.faces


def _trace(rotation: Sequence[Sequence[int]]) -> FaceSet:
    # The walk leaves u->v along v->w, where w follows u in the rotation at v.
    position = [
        {u: i for i, u in enumerate(order)}
        for order in rotation
    ]

    def next_half_edge(half_edge: HalfEdge) -> HalfEdge:
        order = rotation[half_edge.head]
        successor = order[(position[half_edge.head][half_edge.tail] + 1) % len(order)]
        return HalfEdge(half_edge.head, successor)

    faces: List[Face] = []
    seen = set()
    for v, order in enumerate(rotation):
        if not order:
            faces.append(Face(len(faces), (), (v,)))
            continue

        for u in order:
            start = HalfEdge(v, u)
            if start in seen:
                continue

            walk = []
            half_edge = start
            while half_edge not in seen:
                seen.add(half_edge)
                walk.append(half_edge)
                half_edge = next_half_edge(half_edge)

            if half_edge != start:
                raise RuntimeError('internal error - face walk did not close', start)

            faces.append(Face(len(faces), tuple(walk), tuple(h.tail for h in walk)))

    face_of = {h: face.index for face in faces for h in face.walk}
    incidences = [
        tuple(face_of[HalfEdge(v, u)] for u in order) if order else (_isolated_face(faces, v),)
        for v, order in enumerate(rotation)
    ]

    return FaceSet(faces, incidences)


def _isolated_face(faces: Sequence[Face], v: int) -> int:
    for face in faces:
        if not face.walk and face.corners == (v,):
            return face.index

    raise RuntimeError('internal error - isolated vertex without a face', v)
