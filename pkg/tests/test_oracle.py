import itertools
import random
import unittest

import networkx as nx

from toruscolor import (
    BudgetExceeded, DefectiveColoring, Graph, ListAssignment, OracleSolver, Unsatisfiable,
    gen_complete, gen_cycle, oracle_solve, search_order, verify_coloring,
)


def _brute_force(graph, lists, d):
    for choice in itertools.product(*(sorted(lists[v]) for v in range(graph.n))):
        coloring = DefectiveColoring(dict(enumerate(choice)), d)
        if verify_coloring(graph, lists, coloring, d).ok:
            return True
    return False


def _random_instances():
    rng = random.Random(2024)
    for index in range(12):
        nx_graph = nx.gnp_random_graph(rng.randint(5, 9), 0.5, seed=index)
        graph = Graph.from_networkx(nx_graph)
        lists = ListAssignment({
            v: rng.sample(range(1, 5), rng.randint(1, 3)) for v in range(graph.n)
        })
        yield graph, lists


class OracleTestCase(unittest.TestCase):
    def test_complete_graphs(self):
        for n, satisfiable in ((5, True), (6, True), (7, False)):
            with self.subTest(n=n):
                graph = gen_complete(n).graph
                lists = ListAssignment.constant(n, [1, 2, 3])
                result = oracle_solve(graph, lists, 1)

                if satisfiable:
                    self.assertIsInstance(result, DefectiveColoring)
                    self.assertTrue(verify_coloring(graph, lists, result, 1).ok)
                else:
                    self.assertIsInstance(result, Unsatisfiable)
                    self.assertGreater(result.nodes, 0)

    def test_cycles(self):
        graph = gen_cycle(5).graph

        result = oracle_solve(graph, ListAssignment.constant(5, [1, 2]), 1)
        self.assertIsInstance(result, DefectiveColoring)
        self.assertEqual(result.impropriety, 1)

        self.assertIsInstance(oracle_solve(graph, ListAssignment.constant(5, [1, 2]), 0), Unsatisfiable)
        self.assertIsInstance(oracle_solve(graph, ListAssignment.constant(5, [1]), 1), Unsatisfiable)
        self.assertIsInstance(oracle_solve(gen_cycle(6).graph, ListAssignment.constant(6, [1, 2]), 0),
                              DefectiveColoring)

    def test_agrees_with_brute_force(self):
        for graph, lists in _random_instances():
            for d in (0, 1, 2):
                with self.subTest(graph=graph, d=d):
                    result = oracle_solve(graph, lists, d)
                    self.assertEqual(isinstance(result, DefectiveColoring), _brute_force(graph, lists, d))
                    if isinstance(result, DefectiveColoring):
                        self.assertTrue(verify_coloring(graph, lists, result, d).ok)

    def test_witness_is_deterministic(self):
        graph = gen_complete(6).graph
        lists = ListAssignment.constant(6, [1, 2, 3])

        first = oracle_solve(graph, lists, 1)
        self.assertEqual(dict(first.colors), dict(oracle_solve(graph, lists, 1).colors))

        # smallest colors first along the search order
        order = search_order(graph)
        self.assertEqual([first.colors[v] for v in order], [1, 1, 2, 2, 3, 3])

    def test_workers(self):
        lists = ListAssignment.constant(7, [1, 2, 3])
        self.assertIsInstance(OracleSolver(workers=2).solve(gen_complete(7).graph, lists, 1), Unsatisfiable)

        graph = gen_complete(5).graph
        lists = ListAssignment.constant(5, [1, 2, 3])
        serial = OracleSolver().solve(graph, lists, 1)
        parallel = OracleSolver(workers=2).solve(graph, lists, 1)
        self.assertEqual(dict(serial.colors), dict(parallel.colors))

    def test_budget(self):
        solver = OracleSolver(node_budget=10)
        with self.assertRaises(BudgetExceeded) as ctx:
            solver.solve(gen_complete(7).graph, ListAssignment.constant(7, [1, 2, 3]), 1)
        self.assertEqual(ctx.exception.budget, 10)

        with self.assertRaises(ValueError):
            OracleSolver(node_budget=0)

    def test_empty_graph(self):
        result = oracle_solve(Graph([]), ListAssignment({}), 0)
        self.assertEqual(dict(result.colors), {})

    def test_missing_list_is_empty(self):
        graph = Graph.from_edges(2, [(0, 1)])
        self.assertIsInstance(oracle_solve(graph, ListAssignment({0: [1]}), 1), Unsatisfiable)


class SearchOrderTestCase(unittest.TestCase):
    def test_star(self):
        graph = Graph.from_networkx(nx.star_graph(4))
        self.assertEqual(search_order(graph), [4, 0, 3, 2, 1])

    def test_is_permutation(self):
        graph = gen_complete(7).graph
        self.assertEqual(sorted(search_order(graph)), list(range(7)))
