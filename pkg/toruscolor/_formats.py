"""
Text formats. All files are UTF-8 with LF line endings; emitters list vertices ascending.

Rotation file::

    n 4 genus 0
    0: 1 3 2
    1: 2 3 0
    ...

Lists and coloring files::

    0: a b c            d 1
    1: a b d            0: a
                        1: d

Corpus entry: `# name <name>` and `# source <generator> k=v ...` comment lines, then a
rotation body or a single `graph6 <string>` line.
"""
import logging
import re
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Tuple

import networkx as nx

from toruscolor._coloring import CONSTRUCTIVE_IMPROPRIETY, DefectiveColoring, ListAssignment
from toruscolor._embedding import EmbeddedGraph, build_embedded_graph
from toruscolor._graph import Graph
from toruscolor._types import ToruscolorError

logger = logging.getLogger(__name__)

_numeric_re = re.compile(r'0|[1-9]\d*')


class Provenance(NamedTuple):
    generator: str
    params: Tuple[Tuple[str, str], ...] = ()

    def render(self) -> str:
        return ' '.join([self.generator] + [f'{key}={value}' for key, value in self.params])


class CorpusEntry(NamedTuple):
    name: str
    graph: Graph
    embedding: Optional[EmbeddedGraph]
    provenance: Provenance


class Palette:
    """
    Two-way mapping between color tokens in files and integer color ids.

    A token written as a plain decimal is its own id. Other tokens are ranked in sorted
    order after the largest numeric id; later tokens take the next free id.
    """

    def __init__(self, tokens: Iterable[str] = ()):
        self._ids: Dict[str, int] = {}
        self._tokens: Dict[int, str] = {}

        tokens = set(tokens)
        numeric = sorted((token for token in tokens if _numeric_re.fullmatch(token)), key=int)
        for token in numeric:
            self._add(token, int(token))
        for token in sorted(tokens - set(numeric)):
            self._add(token, self._next_free())

    @property
    def ids(self) -> Mapping[str, int]:
        return dict(self._ids)

    def intern(self, token: str) -> int:
        if token in self._ids:
            return self._ids[token]

        color = int(token) if _numeric_re.fullmatch(token) else self._next_free()
        if color in self._tokens:
            color = self._next_free()
        self._add(token, color)
        return color

    def token(self, color: int) -> str:
        return self._tokens.get(color, str(color))

    def __contains__(self, token: object) -> bool:
        return token in self._ids

    def __len__(self) -> int:
        return len(self._ids)

    def __repr__(self) -> str:
        return f'Palette({dict(sorted(self._ids.items(), key=lambda item: item[1]))})'

    def _add(self, token: str, color: int) -> None:
        self._ids[token] = color
        self._tokens[color] = token

    def _next_free(self) -> int:
        return max(self._tokens, default=0) + 1


def parse_graph6(text: str) -> Graph:
    """
    :raises MalformedGraph6
    """

    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) != 1:
        raise MalformedGraph6(text, 'expected exactly one graph')

    try:
        nx_graph = nx.from_graph6_bytes(lines[0].encode('ascii'))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as exc:
        raise MalformedGraph6(lines[0], str(exc)) from exc

    return Graph.from_networkx(nx_graph)


def emit_graph6(graph: Graph) -> str:
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode('ascii')


def parse_rotation(text: str) -> EmbeddedGraph:
    """
    :raises FormatParseError
    :raises UnknownVertex
    :raises GenusMismatch
    :raises GraphError
    """

    return _parse_rotation_lines(list(_content_lines(text)))


def emit_rotation(embedded: EmbeddedGraph) -> str:
    return f'n {embedded.graph.n} genus {embedded.genus}\n' + ''.join(
        _vertex_line(v, (str(u) for u in order)) for v, order in enumerate(embedded.rotation)
    )


def parse_lists(text: str, n: int) -> Tuple[ListAssignment, Palette]:
    """
    :raises FormatParseError
    :raises UnknownVertex
    """

    entries = _vertex_entries(_content_lines(text), n)
    palette = Palette(token for entry in entries.values() for token in entry.tokens)

    lists = {}
    for v, (line_no, tokens) in entries.items():
        if len(set(tokens)) != len(tokens):
            raise FormatParseError(line_no, f'vertex {v} lists a color twice')
        lists[v] = [palette.intern(token) for token in tokens]

    logger.debug('parsed lists for %d of %d vertices, %d colors', len(lists), n, len(palette))
    return ListAssignment(lists), palette


def emit_lists(lists: ListAssignment, palette: Optional[Palette] = None) -> str:
    palette = palette or Palette()
    return ''.join(
        _vertex_line(v, (palette.token(color) for color in sorted(lists[v])))
        for v in lists
    )


def parse_coloring(
        text: str, n: int, palette: Optional[Palette] = None,
        impropriety: int = CONSTRUCTIVE_IMPROPRIETY,
) -> DefectiveColoring:
    """
    Tokens are resolved through `palette` (typically the one read with the lists);
    tokens it does not know are interned. A `d <int>` header overrides `impropriety`.

    :raises FormatParseError
    :raises UnknownVertex
    """

    palette = palette if palette is not None else Palette()
    lines = list(_content_lines(text))
    if lines and lines[0][1].startswith('d '):
        line_no, header = lines.pop(0)
        impropriety = _parse_header_int(line_no, header, 'd')

    colors = {}
    for v, (line_no, tokens) in _vertex_entries(lines, n).items():
        if len(tokens) != 1:
            raise FormatParseError(line_no, f'vertex {v} should have exactly one color, got {len(tokens)}')
        colors[v] = palette.intern(tokens[0])

    return DefectiveColoring(colors, impropriety)


def emit_coloring(coloring: DefectiveColoring, palette: Optional[Palette] = None) -> str:
    palette = palette or Palette()
    return f'd {coloring.impropriety}\n' + ''.join(
        _vertex_line(v, (palette.token(coloring.colors[v]),)) for v in sorted(coloring.colors)
    )


def parse_corpus_entry(text: str) -> CorpusEntry:
    """
    :raises FormatParseError
    :raises MalformedGraph6
    :raises GenusMismatch
    """

    name = None
    provenance = Provenance('file')
    body: List[Tuple[int, str]] = []

    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith('#'):
            key, _, value = line[1:].strip().partition(' ')
            if key == 'name':
                name = value.strip()
            elif key == 'source':
                provenance = _parse_provenance(line_no, value)
        elif line:
            body.append((line_no, line))

    if not name:
        raise FormatParseError(1, 'corpus entry has no "# name" line')
    if not body:
        raise FormatParseError(1, 'corpus entry has no graph')

    first_no, first = body[0]
    if first.startswith('graph6 '):
        if len(body) > 1:
            raise FormatParseError(body[1][0], 'unexpected content after the graph6 line')
        return CorpusEntry(name, parse_graph6(first[len('graph6 '):]), None, provenance)

    embedded = _parse_rotation_lines(body)
    return CorpusEntry(name, embedded.graph, embedded, provenance)


def emit_corpus_entry(entry: CorpusEntry) -> str:
    header = f'# name {entry.name}\n# source {entry.provenance.render()}\n'
    if entry.embedding is None:
        return header + f'graph6 {emit_graph6(entry.graph)}'
    return header + emit_rotation(entry.embedding)


def _parse_provenance(line_no: int, text: str) -> Provenance:
    generator, *pairs = text.split()
    params = []
    for pair in pairs:
        key, sep, value = pair.partition('=')
        if not sep or not key:
            raise FormatParseError(line_no, f'expected key=value, got {pair!r}')
        params.append((key, value))
    return Provenance(generator, tuple(params))


def _parse_rotation_lines(lines: List[Tuple[int, str]]) -> EmbeddedGraph:
    if not lines:
        raise FormatParseError(1, 'empty rotation file')

    line_no, header = lines[0]
    words = header.split()
    if len(words) not in (2, 4) or words[0] != 'n' or (len(words) == 4 and words[2] != 'genus'):
        raise FormatParseError(line_no, 'expected header "n <count> [genus <g>]"')

    n = _parse_int(line_no, words[1])
    declared = _parse_int(line_no, words[3]) if len(words) == 4 else None

    entries = _vertex_entries(lines[1:], n)
    rotation: List[List[int]] = []
    for v in range(n):
        entry = entries.get(v, _VertexEntry(line_no, []))
        rotation.append([_parse_int(entry.line_no, token) for token in entry.tokens])
    for order in rotation:
        for u in order:
            if not 0 <= u < n:
                raise UnknownVertex(u, n)

    embedded = build_embedded_graph(Graph(rotation), rotation)
    if declared is not None and declared != embedded.genus:
        raise GenusMismatch(declared, embedded.genus)

    return embedded


def _content_lines(text: str) -> Iterator[Tuple[int, str]]:
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith('#'):
            yield line_no, line


class _VertexEntry(NamedTuple):
    line_no: int
    tokens: List[str]


def _vertex_entries(lines: Iterable[Tuple[int, str]], n: int) -> Dict[int, _VertexEntry]:
    entries: Dict[int, _VertexEntry] = {}
    for line_no, line in lines:
        head, sep, rest = line.partition(':')
        if not sep:
            raise FormatParseError(line_no, 'expected "<vertex>: ..."')

        v = _parse_int(line_no, head.strip())
        if not 0 <= v < n:
            raise UnknownVertex(v, n)
        if v in entries:
            raise FormatParseError(line_no, f'vertex {v} appears twice')
        entries[v] = _VertexEntry(line_no, rest.split())

    return dict(sorted(entries.items()))


def _vertex_line(v: int, tokens: Iterable[str]) -> str:
    return f'{v}:' + ''.join(f' {token}' for token in tokens) + '\n'


def _parse_header_int(line_no: int, line: str, key: str) -> int:
    words = line.split()
    if len(words) != 2 or words[0] != key:
        raise FormatParseError(line_no, f'expected header "{key} <int>"')
    return _parse_int(line_no, words[1])


def _parse_int(line_no: int, token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatParseError(line_no, f'expected an integer, got {token!r}') from None


class FormatError(ToruscolorError):
    pass


class MalformedGraph6(FormatError):
    def __init__(self, text: str, reason: str):
        self.text = text
        self.reason = reason

    def __str__(self) -> str:
        return f'Malformed graph6 string {self.text!r}: {self.reason}'


class FormatParseError(FormatError):
    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message

    def __str__(self) -> str:
        if not self.line:
            return self.message
        return f'line {self.line}: {self.message}'


class GenusMismatch(FormatError):
    def __init__(self, declared: int, computed: int):
        self.declared = declared
        self.computed = computed

    def __str__(self) -> str:
        return f'File declares genus {self.declared}, the rotation has genus {self.computed}'


class UnknownVertex(FormatError):
    def __init__(self, v: int, n: int):
        self.v = v
        self.n = n

    def __str__(self) -> str:
        return f'Vertex {self.v} is outside 0..{self.n - 1}'
