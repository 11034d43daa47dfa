import functools
import random
import unittest
from collections import defaultdict
from fractions import Fraction

from toruscolor import (
    Comparison, Configuration, DefectiveColoring, Graph, ReductionOutcome, RuleSet, TriangleMode,
    adjacent_triangles_present, apply_discharging, audit, builtin_rules, class_membership,
    color_from_plan, condition, embed_rotation, emit_coloring, emit_corpus_entry, emit_graph6,
    emit_lists, emit_rotation, emit_rules, expected_total, face_rule, find_reducible_configuration,
    gen_complete, gen_cycle, gen_subdivision, gen_torus_grid, incidence_bound_violations,
    initial_charges, oracle_solve, parse_coloring, parse_corpus_entry, parse_graph6, parse_lists,
    parse_rotation, parse_rules, plan_reduction, reduce_and_color, verify_coloring,
    verify_observations, vertex_rule,
)
from toruscolor.utils import random_lists

GRID_SIZES = range(3, 9)


def _grids(sizes=GRID_SIZES):
    return [
        gen_torus_grid(m, n, diagonals)
        for diagonals in (False, True)
        for m in sizes
        for n in sizes
    ]


@functools.lru_cache(maxsize=None)
def _corpus():
    """Every torus grid with sides 3..8, K4 and K5, each plain and 1- and 2-subdivided."""

    bases = _grids() + [gen_complete(4), gen_complete(5)]
    return tuple(bases + [gen_subdivision(base, k) for base in bases for k in (1, 2)])


@functools.lru_cache(maxsize=None)
def _small_corpus():
    bases = _grids(range(3, 6)) + [gen_complete(4), gen_complete(5), gen_complete(7)]
    return tuple(bases + [gen_subdivision(base, k) for base in bases[::4] for k in (1, 2)])


@functools.lru_cache(maxsize=None)
def _class_corpus():
    # subdividing every edge k >= 2 times leaves only cycles of length at least 9 divisible by k + 1
    bases = _grids() + [gen_complete(n) for n in range(3, 8)] + [gen_cycle(n) for n in range(3, 13)]
    entries = [gen_subdivision(base, 2) for base in bases]
    entries += [gen_subdivision(base, 3) for base in _grids(range(3, 6))]
    return tuple(entries)


def _embedded(n, edges):
    graph = Graph.from_edges(n, edges)
    return embed_rotation(graph.adjacency)


def _path_edges(first, last, internal):
    walk = [first, *internal, last]
    return list(zip(walk, walk[1:]))


def _small_class_members():
    """In-class graphs on at most 12 vertices: cycles without C6, a theta, a pentagon pair and trees."""

    members = [gen_cycle(n).embedding for n in (3, 4, 5, 7, 8, 9, 10, 11, 12)]

    theta = (
        _path_edges(0, 1, [2, 3, 4])
        + _path_edges(0, 1, [5, 6, 7])
        + _path_edges(0, 1, [8, 9, 10])
    )
    members.append(_embedded(11, theta))

    pentagons = [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
    members.append(_embedded(10, pentagons + [(0, 5)]))

    members.append(_embedded(5, [(0, 1), (0, 2), (0, 3), (0, 4)]))
    members.append(_embedded(6, _path_edges(0, 5, [1, 2, 3, 4])))
    return members


def _random_rules(rng):
    # distinct source degrees per kind keep the selectors from overlapping
    vertex_sources = rng.sample(range(2, 9), 3)
    face_sources = rng.sample(range(3, 13), 3)

    rules = [
        vertex_rule(
            condition(Comparison.EQ, k),
            condition(Comparison.IN, *rng.sample(range(3, 10), 2)),
            Fraction(rng.randint(1, 5), rng.randint(1, 60)),
        )
        for k in vertex_sources
    ]
    rules.extend(
        face_rule(
            condition(Comparison.EQ, d),
            condition(Comparison.LE, rng.randint(3, 12)),
            Fraction(rng.randint(1, 5), rng.randint(1, 60)),
        )
        for d in face_sources
    )
    return RuleSet(rules)


class ChargePropertiesTestCase(unittest.TestCase):
    def test_initial_total_matches_euler(self):
        for entry in _corpus():
            with self.subTest(entry.name):
                embedded = entry.embedding
                self.assertEqual(initial_charges(embedded).total(), expected_total(embedded))
                self.assertEqual(expected_total(embedded), 2 * embedded.genus - 2)

    def test_random_rule_files_conserve_charge(self):
        rng = random.Random(7)
        corpus = _small_corpus()

        for index in range(20):
            text = emit_rules(_random_rules(rng))
            rules = parse_rules(text)
            entry = corpus[index * 7 % len(corpus)]

            with self.subTest(entry.name, rules=text):
                initial = initial_charges(entry.embedding)
                final, ledger = apply_discharging(entry.embedding, rules)

                self.assertTrue(audit(final, entry.embedding).conserved)
                self.assertEqual(final.total(), initial.total())
                for element, value in final.elements():
                    self.assertEqual(
                        value, initial.charge(element) - ledger.outgoing(element) + ledger.incoming(element),
                    )

    def test_ledger_accounts_for_every_change(self):
        for entry in _corpus():
            for case in (1, 2):
                with self.subTest(entry.name, case=case):
                    initial = initial_charges(entry.embedding)
                    final, ledger = apply_discharging(entry.embedding, builtin_rules(case))

                    delta = defaultdict(Fraction)
                    for transfer in ledger.entries:
                        delta[transfer.source] -= transfer.amount
                        delta[transfer.target] += transfer.amount

                    self.assertTrue(audit(final, entry.embedding).conserved)
                    for element, value in final.elements():
                        self.assertEqual(value, initial.charge(element) + delta[element])

    def test_incidence_bounds_follow_observations(self):
        for entry in _corpus():
            for case in (1, 2):
                embedded = entry.embedding
                if class_membership(embedded).in_class and verify_observations(embedded, case).passed:
                    with self.subTest(entry.name, case=case):
                        self.assertEqual(incidence_bound_violations(embedded, case), [])


class StructurePropertiesTestCase(unittest.TestCase):
    def test_face_triangles_imply_cycle_triangles(self):
        for entry in _corpus():
            with self.subTest(entry.name):
                if adjacent_triangles_present(entry.graph, entry.embedding, TriangleMode.FACES):
                    self.assertTrue(adjacent_triangles_present(entry.graph, entry.embedding, TriangleMode.CYCLES))

    def test_class_members_always_have_a_configuration(self):
        corpus = _class_corpus()
        self.assertGreaterEqual(len(corpus), 100)

        for entry in corpus:
            with self.subTest(entry.name):
                self.assertTrue(class_membership(entry.embedding).in_class)
                self.assertIsInstance(find_reducible_configuration(entry.graph, entry.embedding), Configuration)


class ColoringPropertiesTestCase(unittest.TestCase):
    def test_class_members_are_colorable(self):
        corpus = [
            gen_subdivision(base, 2)
            for base in _grids(range(3, 6)) + [gen_complete(n) for n in range(4, 8)]
        ]

        for entry in corpus:
            plan = plan_reduction(entry.graph)
            self.assertFalse(plan.stuck, entry.name)

            for seed in range(100):
                with self.subTest(entry.name, seed=seed):
                    lists = random_lists(entry.graph, seed=seed)
                    outcome = color_from_plan(entry.graph, plan, lists)

                    self.assertIsInstance(outcome, ReductionOutcome)
                    self.assertTrue(verify_coloring(entry.graph, lists, outcome.coloring, 1).ok)

    def test_extension_avoids_colored_neighbors(self):
        for base in (gen_torus_grid(3, 4, diagonals=True), gen_complete(7)):
            entry = gen_subdivision(base, 2)

            for seed in range(5):
                lists = random_lists(entry.graph, seed=seed)
                outcome = reduce_and_color(entry.graph, lists)
                colors = outcome.coloring.colors
                steps = outcome.trace.steps

                with self.subTest(entry.name, seed=seed):
                    # steps run in peeling order, so later steps were colored first
                    for index, step in enumerate(steps):
                        witness = set(step.deleted)
                        colored_before = {v for later in steps[index + 1:] for v in later.deleted}

                        for v in witness:
                            self.assertIn(colors[v], step.residual[v])
                            for u in entry.graph.neighbors(v):
                                if u in colored_before:
                                    self.assertNotEqual(colors[u], colors[v])

    def test_oracle_agrees_with_reduction(self):
        for embedded in _small_class_members():
            graph = embedded.graph
            self.assertLessEqual(graph.n, 12)
            self.assertTrue(class_membership(embedded).in_class, graph)

            for seed in range(10):
                with self.subTest(graph, seed=seed):
                    lists = random_lists(graph, seed=seed)
                    outcome = reduce_and_color(graph, lists)
                    result = oracle_solve(graph, lists, 1)

                    self.assertIsInstance(outcome, ReductionOutcome)
                    self.assertIsInstance(result, DefectiveColoring)
                    self.assertTrue(verify_coloring(graph, lists, result, 1).ok)


class FormatPropertiesTestCase(unittest.TestCase):
    def test_round_trips(self):
        for index, entry in enumerate(_corpus()):
            with self.subTest(entry.name):
                graph = entry.graph
                self.assertEqual(parse_rotation(emit_rotation(entry.embedding)), entry.embedding)
                self.assertEqual(parse_corpus_entry(emit_corpus_entry(entry)), entry)
                self.assertEqual(parse_graph6(emit_graph6(graph)), graph)

                lists = random_lists(graph, seed=index)
                self.assertEqual(parse_lists(emit_lists(lists), graph.n)[0], lists)

                coloring = DefectiveColoring({v: min(lists[v]) for v in range(graph.n)}, 2)
                parsed = parse_coloring(emit_coloring(coloring), graph.n)
                self.assertEqual(dict(parsed.colors), dict(coloring.colors))
                self.assertEqual(parsed.impropriety, 2)
