import unittest
from fractions import Fraction

from toruscolor import (
    BOUND_TEMPLATES, ChargeStage, StageError, apply_discharging, applicable_template, audit,
    audit_constants, builtin_rules, case1_vertex_floor, case2_vertex_bound_large_r1,
    case2_vertex_bound_small_r1, expected_total, face, gen_complete, gen_subdivision,
    gen_torus_grid, initial_charges, parse_rules, replay_ledger, vertex,
)


class ChargeTestCase(unittest.TestCase):
    def test_initial_charges(self):
        embedded = gen_torus_grid(4, 4).embedding
        state = initial_charges(embedded)

        self.assertEqual(state.stage, ChargeStage.INITIAL)
        self.assertEqual(set(state.vertex_charge), {Fraction(1, 3)})
        self.assertEqual(set(state.face_charge), {Fraction(-1, 3)})
        self.assertEqual(state.total(), 0)

    def test_expected_total(self):
        for entry, total in (
                (gen_complete(4), -2),
                (gen_complete(7), 0),
                (gen_torus_grid(3, 3), 0),
                (gen_subdivision(gen_complete(5), 1), 0),
        ):
            with self.subTest(entry.name):
                self.assertEqual(expected_total(entry.embedding), total)
                self.assertEqual(initial_charges(entry.embedding).total(), total)


class DischargingTestCase(unittest.TestCase):
    def test_grid_case_1(self):
        embedded = gen_torus_grid(4, 4).embedding
        state, ledger = apply_discharging(embedded, builtin_rules(1))

        self.assertEqual(state.stage, ChargeStage.FINAL)
        self.assertEqual(state.case, 1)
        self.assertEqual(set(state.vertex_charge), {Fraction(-1, 3)})
        self.assertEqual(set(state.face_charge), {Fraction(1, 3)})
        self.assertEqual(ledger.firing_counts(), {1: 64})
        self.assertEqual(ledger.outgoing(vertex(0)), Fraction(2, 3))
        self.assertEqual(ledger.incoming(face(0)), Fraction(2, 3))

        report = audit(state, embedded)
        self.assertEqual(report.total, 0)
        self.assertTrue(report.conserved)
        self.assertFalse(report.nonnegative)
        self.assertEqual((len(report.negatives), len(report.positives)), (16, 16))
        self.assertEqual(report.template_checks, ())
        self.assertEqual(report.lines()[:5], [
            'total 0/1', 'expected 0/1', 'conserved yes', 'negatives 16', 'positives 16',
        ])
        self.assertEqual(report.lines()[5], 'negative vertex 0 -1/3')

    def test_k7_case_1(self):
        embedded = gen_complete(7).embedding
        state, ledger = apply_discharging(embedded, builtin_rules(1))

        self.assertEqual(set(state.vertex_charge), {Fraction(-1)})
        self.assertEqual(set(state.face_charge), {Fraction(1, 2)})
        self.assertEqual(ledger.firing_counts(), {2: 42})
        self.assertTrue(audit(state, embedded).conserved)

    def test_large_faces_pay_small_ones(self):
        # the 12-faces of the subdivided grid pay nothing: no 4^--face is adjacent
        embedded = gen_subdivision(gen_torus_grid(3, 3), 2).embedding
        state, ledger = apply_discharging(embedded, builtin_rules(1))

        self.assertEqual(ledger.entries, ())
        self.assertEqual(state.vertex_charge, initial_charges(embedded).vertex_charge)

        rules = parse_rules('face d>=7 -> adjface d>=7: 1/42 per-edge\n')
        state, ledger = apply_discharging(embedded, rules)
        self.assertEqual(len(ledger.entries), 2 * embedded.graph.edge_count)
        self.assertEqual(state.face_charge, initial_charges(embedded).face_charge)

    def test_replay(self):
        embedded = gen_complete(6).embedding
        state, ledger = apply_discharging(embedded, builtin_rules(2))

        replayed = replay_ledger(initial_charges(embedded), ledger, 2)
        self.assertEqual(replayed, state)

    def test_audit_needs_final_stage(self):
        embedded = gen_complete(4).embedding
        with self.assertRaises(StageError):
            audit(initial_charges(embedded), embedded)

    def test_builtin_rules(self):
        self.assertEqual(len(builtin_rules(1)), 3)
        self.assertEqual(len(builtin_rules(2)), 6)
        with self.assertRaises(ValueError):
            builtin_rules(3)


class BoundTestCase(unittest.TestCase):
    def test_template_bounds(self):
        self.assertEqual([template.bound for template in BOUND_TEMPLATES], [
            Fraction(1, 14), Fraction(1, 14), Fraction(11, 42), Fraction(1, 24),
            Fraction(0), Fraction(1, 8), Fraction(0), Fraction(1, 12),
        ])
        self.assertEqual([template.strict for template in BOUND_TEMPLATES], [
            True, True, True, True, False, True, False, True,
        ])

    def test_vertex_bounds(self):
        self.assertEqual([case1_vertex_floor(k) for k in range(3, 8)], [
            0, 0, 0, 0, Fraction(1, 3),
        ])
        self.assertEqual(case2_vertex_bound_small_r1(6), Fraction(1, 3))
        self.assertEqual(case2_vertex_bound_large_r1(6), Fraction(1, 36))
        self.assertEqual(case2_vertex_bound_large_r1(7), Fraction(11, 36))

    def test_audit_constants(self):
        checks = audit_constants(max_degree=20)

        self.assertTrue(all(check.holds for check in checks))
        self.assertEqual(len(checks), len(BOUND_TEMPLATES) + 18 + 2 * 15)

    def test_no_template_on_grid(self):
        embedded = gen_torus_grid(4, 4).embedding
        for case in (1, 2):
            with self.subTest(case=case):
                self.assertIsNone(applicable_template(embedded, 0, case))
