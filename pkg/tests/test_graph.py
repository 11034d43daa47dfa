import unittest

import networkx as nx

from toruscolor import (
    AsymmetricAdjacency, CapExceeded, CycleFinder, Graph, InvalidVertex, NotSimple, gen_subdivision,
    gen_torus_grid, has_cycle_of_length,
)


class GraphTestCase(unittest.TestCase):
    def test_basic_accessors(self):
        graph = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)])

        self.assertEqual(graph.n, 4)
        self.assertEqual(graph.edge_count, 4)
        self.assertEqual(graph.degree(2), 3)
        self.assertEqual(graph.min_degree(), 1)
        self.assertTrue(graph.has_edge(3, 2))
        self.assertFalse(graph.has_edge(0, 3))
        self.assertEqual(list(graph.edges()), [(0, 1), (0, 2), (1, 2), (2, 3)])
        self.assertEqual(graph.neighbors_in(2, {0, 3}), frozenset({0, 3}))

    def test_equality_ignores_neighbor_order(self):
        self.assertEqual(Graph([[1, 2], [2, 0], [0, 1]]), Graph([[2, 1], [0, 2], [1, 0]]))
        self.assertNotEqual(Graph([[1], [0], []]), Graph([[2], [], [0]]))

    def test_components(self):
        graph = Graph.from_edges(5, [(0, 3), (1, 4)])
        self.assertEqual(graph.components(), [[0, 3], [1, 4], [2]])
        self.assertEqual(Graph.from_edges(4, [(3, 1), (1, 2)]).components(), [[0], [1, 2, 3]])
        self.assertEqual(Graph([]).components(), [])

    def test_invalid_adjacency(self):
        with self.assertRaises(AsymmetricAdjacency):
            Graph([[1], []])
        with self.assertRaises(NotSimple):
            Graph([[0]])
        with self.assertRaises(NotSimple):
            Graph([[1, 1], [0, 0]])
        with self.assertRaises(InvalidVertex):
            Graph.from_edges(2, [(0, 2)])

    def test_networkx_conversion(self):
        petersen = Graph.from_networkx(nx.petersen_graph())
        self.assertEqual(petersen.n, 10)
        self.assertEqual(petersen.edge_count, 15)
        self.assertTrue(nx.is_isomorphic(petersen.to_networkx(), nx.petersen_graph()))


class CycleFinderTestCase(unittest.TestCase):
    def _make_graphs(self):
        return {
            'petersen': Graph.from_networkx(nx.petersen_graph()),
            'k4': Graph.from_networkx(nx.complete_graph(4)),
            'grid': gen_torus_grid(3, 4).graph,
            'grid-diag': gen_torus_grid(3, 3, diagonals=True).graph,
            'k4-sub1': gen_subdivision(Graph.from_networkx(nx.complete_graph(4)), 1).graph,
            'tree': Graph.from_networkx(nx.balanced_tree(2, 3)),
        }

    def test_matches_networkx(self):
        for name, graph in self._make_graphs().items():
            expected = {len(cycle) for cycle in nx.simple_cycles(graph.to_networkx(), length_bound=8)}
            for length in range(3, 9):
                with self.subTest(graph=name, length=length):
                    self.assertEqual(has_cycle_of_length(graph, length), length in expected)

    def test_petersen(self):
        petersen = Graph.from_networkx(nx.petersen_graph())
        flags = CycleFinder().cycle_flags(petersen, range(3, 9))
        self.assertEqual(flags, {3: False, 4: False, 5: True, 6: True, 7: False, 8: True})

    def test_short_lengths(self):
        graph = Graph.from_networkx(nx.complete_graph(4))
        self.assertFalse(has_cycle_of_length(graph, 2))
        self.assertFalse(has_cycle_of_length(graph, 5))

    def test_cap(self):
        graph = Graph.from_networkx(nx.cycle_graph(9))
        with self.assertRaises(CapExceeded):
            has_cycle_of_length(graph, 9)

        self.assertTrue(CycleFinder(cap=9).has_cycle_of_length(graph, 9))

        with self.assertRaises(ValueError):
            CycleFinder(cap=2)
