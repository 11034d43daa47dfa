import unittest

from toruscolor import (
    CorpusEntry, DefectiveColoring, FormatParseError, GenusMismatch, Graph, ListAssignment,
    MalformedGraph6, NotSimple, Palette, Provenance, UnknownVertex, emit_coloring,
    emit_corpus_entry, emit_graph6, emit_lists, emit_rotation, gen_complete, gen_subdivision,
    gen_torus_grid, parse_coloring, parse_corpus_entry, parse_graph6, parse_lists, parse_rotation,
)

K4_ROTATION = '''\
n 4 genus 0
0: 1 3 2
1: 2 3 0
2: 0 3 1
3: 0 1 2
'''


class Graph6TestCase(unittest.TestCase):
    def test_parse(self):
        self.assertEqual(parse_graph6('Bw\n'), Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)]))
        self.assertEqual(parse_graph6('C~'), gen_complete(4).graph)
        self.assertEqual(parse_graph6('\n  B?  \n').edge_count, 0)

    def test_emit(self):
        self.assertEqual(emit_graph6(gen_complete(3).graph), 'Bw\n')
        self.assertEqual(emit_graph6(gen_complete(4).graph), 'C~\n')

        graph = gen_torus_grid(3, 5).graph
        self.assertEqual(parse_graph6(emit_graph6(graph)), graph)

    def test_malformed(self):
        for text in ('', 'C', 'Bw\nBw\n', 'B w'):
            with self.subTest(text=text):
                with self.assertRaises(MalformedGraph6):
                    parse_graph6(text)


class RotationFormatTestCase(unittest.TestCase):
    def test_parse(self):
        embedded = parse_rotation('# planar K4\n' + K4_ROTATION)

        self.assertEqual(embedded.graph, gen_complete(4).graph)
        self.assertEqual(embedded.rotation[0], (1, 3, 2))
        self.assertEqual(embedded.genus, 0)

    def test_emit(self):
        self.assertEqual(emit_rotation(parse_rotation(K4_ROTATION)), K4_ROTATION)

        embedded = gen_torus_grid(3, 3, diagonals=True).embedding
        self.assertEqual(parse_rotation(emit_rotation(embedded)), embedded)

    def test_genus_is_optional(self):
        embedded = parse_rotation(K4_ROTATION.replace(' genus 0', ''))
        self.assertEqual(embedded.genus, 0)

    def test_errors(self):
        with self.assertRaises(GenusMismatch) as ctx:
            parse_rotation(K4_ROTATION.replace('genus 0', 'genus 1'))
        self.assertEqual((ctx.exception.declared, ctx.exception.computed), (1, 0))

        with self.assertRaises(UnknownVertex):
            parse_rotation('n 2\n0: 5\n1: 0\n')
        with self.assertRaises(UnknownVertex):
            parse_rotation('n 2\n0: 1\n1: 0\n3: 0\n')

        with self.assertRaises(FormatParseError) as ctx:
            parse_rotation('x 4\n')
        self.assertEqual(ctx.exception.line, 1)

        with self.assertRaises(FormatParseError) as ctx:
            parse_rotation('n 2\n0: 1\n1 0\n')
        self.assertEqual(str(ctx.exception), 'line 3: expected "<vertex>: ..."')

        with self.assertRaises(FormatParseError):
            parse_rotation('n 2\n0: 1\n0: 1\n')
        with self.assertRaises(NotSimple):
            parse_rotation('n 2\n0: 1 1\n1: 0 0\n')

        with self.assertRaises(FormatParseError) as ctx:
            parse_rotation('n 2\n\n0: 1\n1: x\n')
        self.assertEqual(str(ctx.exception), "line 4: expected an integer, got 'x'")


class PaletteTestCase(unittest.TestCase):
    def test_numeric_tokens_keep_their_value(self):
        palette = Palette(['3', 'b', '1', 'a'])

        self.assertEqual(palette.ids, {'1': 1, '3': 3, 'a': 4, 'b': 5})
        self.assertEqual(palette.token(4), 'a')
        self.assertEqual(palette.token(9), '9')
        self.assertIn('b', palette)
        self.assertEqual(len(palette), 4)

    def test_leading_zero_is_a_name(self):
        palette = Palette(['01', '1'])
        self.assertEqual(palette.ids, {'1': 1, '01': 2})

    def test_intern(self):
        palette = Palette(['a'])

        self.assertEqual(palette.intern('a'), 1)
        self.assertEqual(palette.intern('1'), 2)
        self.assertEqual(palette.intern('7'), 7)
        self.assertEqual(palette.intern('z'), 8)


class ListsColoringTestCase(unittest.TestCase):
    def test_lists(self):
        lists, palette = parse_lists('0: a b c\n# comment\n1: 1 2 x\n', 3)

        self.assertEqual(lists, ListAssignment({0: [3, 4, 5], 1: [1, 2, 6]}))
        self.assertNotIn(2, lists)
        self.assertEqual(emit_lists(lists, palette), '0: a b c\n1: 1 2 x\n')
        self.assertEqual(emit_lists(ListAssignment({0: [2, 1]})), '0: 1 2\n')

    def test_list_errors(self):
        with self.assertRaises(FormatParseError) as ctx:
            parse_lists('0: a\n1: b b\n', 2)
        self.assertEqual(str(ctx.exception), 'line 2: vertex 1 lists a color twice')
        with self.assertRaises(UnknownVertex):
            parse_lists('1: a\n', 1)
        with self.assertRaises(FormatParseError):
            parse_lists('zero: a\n', 1)

    def test_coloring(self):
        lists, palette = parse_lists('0: a b c\n1: 1 2 x\n', 2)
        coloring = parse_coloring('d 0\n0: a\n1: x\n', 2, palette)

        self.assertEqual(dict(coloring.colors), {0: 3, 1: 6})
        self.assertEqual(coloring.impropriety, 0)
        self.assertEqual(emit_coloring(coloring, palette), 'd 0\n0: a\n1: x\n')

        self.assertEqual(parse_coloring('0: 2\n', 1).impropriety, 1)
        self.assertEqual(parse_coloring('0: 2\n', 1, impropriety=2).impropriety, 2)
        self.assertEqual(emit_coloring(DefectiveColoring({1: 3, 0: 2}, 1)), 'd 1\n0: 2\n1: 3\n')

    def test_coloring_errors(self):
        with self.assertRaises(FormatParseError) as ctx:
            parse_coloring('d 1\n0: a\n1: a b\n', 2)
        self.assertEqual(ctx.exception.line, 3)
        self.assertIn('exactly one color', str(ctx.exception))
        with self.assertRaises(FormatParseError) as ctx:
            parse_coloring('d one\n0: a\n', 1)
        self.assertEqual(ctx.exception.line, 1)


class CorpusEntryTestCase(unittest.TestCase):
    def test_round_trip(self):
        for entry in (gen_torus_grid(3, 3), gen_subdivision(gen_complete(5), 1), gen_complete(1)):
            with self.subTest(entry.name):
                self.assertEqual(parse_corpus_entry(emit_corpus_entry(entry)), entry)

    def test_emit(self):
        self.assertEqual(emit_corpus_entry(gen_complete(3)), (
            '# name K3\n'
            '# source complete n=3\n'
            'n 3 genus 0\n'
            '0: 1 2\n'
            '1: 2 0\n'
            '2: 1 0\n'
        ))

    def test_graph6_body(self):
        entry = CorpusEntry('k4-abstract', gen_complete(4).graph, None, Provenance('manual'))
        text = emit_corpus_entry(entry)

        self.assertEqual(text, '# name k4-abstract\n# source manual\ngraph6 C~\n')
        self.assertEqual(parse_corpus_entry(text), entry)

    def test_errors(self):
        with self.assertRaises(FormatParseError):
            parse_corpus_entry(K4_ROTATION)
        with self.assertRaises(FormatParseError):
            parse_corpus_entry('# name empty\n')
        with self.assertRaises(FormatParseError) as ctx:
            parse_corpus_entry('# name x\n# source gen broken\ngraph6 Bw\n')
        self.assertEqual(ctx.exception.line, 2)
        with self.assertRaises(FormatParseError):
            parse_corpus_entry('# name x\ngraph6 Bw\nmore\n')
