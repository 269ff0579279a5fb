#!/usr/bin/env python3
"""
Unit tests for the amortized flip orientation strategy
"""
import itertools
import unittest

import networkx as nx
import numpy as np

from graph_store import Arc, OrientedGraph
from oracle import core_degeneracy
from orientation import build_strategy, current_cap


class TestAmortizedInsert(unittest.TestCase):
    """Test orientation choices on insert"""

    def test_single_edge_tie(self):
        g = OrientedGraph(2)
        self.assertEqual(g.insert_edge(1, 0), [Arc(0, 1)])

    def test_star_center_keeps_one_out_arc(self):
        """Test that leaves take the arcs once the center has one"""
        g = OrientedGraph(6)
        for i in range(1, 6):
            g.insert_edge(0, i)

        self.assertEqual(g.outdegree(0), 1)
        for i in range(2, 6):
            self.assertEqual(g.arc_between(0, i), Arc(i, 0))

    def test_cascade_resets_overflowing_node(self):
        """Test that a node pushed over the cap has its out-arcs flipped, and so on down the line"""
        g = OrientedGraph(4)
        for tail, head in [(0, 1), (0, 2), (3, 1), (3, 2)]:
            g.add_arc(tail, head)

        flips = g.insert_edge(0, 3)

        self.assertEqual(flips[0], Arc(0, 3))
        self.assertCountEqual(flips[1:], [Arc(1, 0), Arc(2, 0), Arc(1, 3), Arc(2, 3)])
        self.assertEqual([g.outdegree(v) for v in range(4)], [1, 2, 2, 0])
        g.check_consistency()

    def test_dense_graph_forces_rebuild(self):
        """Test that K_6 cannot be held at cap 2 and triggers a rebuild"""
        strategy = build_strategy('amortized')
        g = OrientedGraph(6, strategy=strategy)
        for u, v in itertools.combinations(range(6), 2):
            g.insert_edge(u, v)
            g.check_consistency()

        self.assertGreaterEqual(strategy.rebuilds, 1)
        self.assertGreater(g.d_cap, 2)
        self.assertEqual(g.d_cap, max(2, 4 * strategy.estimate))

    def test_cap_within_multiplier_of_degeneracy(self):
        """Test max outdegree <= 4 * degeneracy at every step of an insert-only run"""
        g = OrientedGraph(200)
        graph = nx.gnm_random_graph(200, 600, seed=4)
        for u, v in graph.edges():
            g.insert_edge(u, v)
            bound = max(2, 4 * core_degeneracy(200, g.undirected_edges()))
            self.assertLessEqual(g.max_outdegree(), bound)
        g.check_consistency()


class TestAmortizedDelete(unittest.TestCase):
    """Test deletions and periodic rebuilds"""

    def test_delete_only_edge(self):
        g = OrientedGraph(2)
        g.insert_edge(0, 1)
        g.delete_edge(0, 1)
        self.assertEqual((g.outdegree(0), g.outdegree(1)), (0, 0))

    def test_rebuild_interval(self):
        """Test that a rebuild runs every rebuild_interval deletions"""
        strategy = build_strategy('amortized', rebuild_interval=3)
        g = OrientedGraph(10, strategy=strategy)
        for v in range(1, 10):
            g.insert_edge(0, v)
        before = strategy.rebuilds

        for v in range(1, 7):
            g.delete_edge(0, v)

        self.assertEqual(strategy.rebuilds - before, 2)
        self.assertEqual(strategy.deletions, 0)

    def test_churn_keeps_cap(self):
        """Test the outdegree contract under random churn"""
        rng = np.random.default_rng(21)
        n = 120
        g = OrientedGraph(n, strategy=build_strategy('amortized', rebuild_interval=16))
        present = []
        for _ in range(2000):
            if present and rng.random() < 0.45:
                u, v = present.pop(int(rng.integers(len(present))))
                g.delete_edge(u, v)
            else:
                u, v = (int(x) for x in rng.integers(n, size=2))
                if u == v or g.has_edge(u, v):
                    continue
                g.insert_edge(u, v)
                present.append((u, v))
            self.assertLessEqual(g.max_outdegree(), g.d_cap)
        g.check_consistency()

    def test_teardown_lowers_cap(self):
        """Test that deleting K_12 edge by edge keeps the cap within 4 * degeneracy + 2"""
        g = OrientedGraph(12, strategy=build_strategy('amortized'))
        edges = list(itertools.combinations(range(12), 2))
        for u, v in edges:
            g.insert_edge(u, v)
        self.assertGreater(current_cap(g), 2)

        for u, v in edges:
            g.delete_edge(u, v)
            degeneracy = core_degeneracy(12, g.undirected_edges())
            self.assertLessEqual(current_cap(g), 4 * degeneracy + 2)
            self.assertLessEqual(g.max_outdegree(), current_cap(g))
        self.assertEqual(current_cap(g), 2)
        g.check_consistency()

    def test_churn_cap_tracks_degeneracy(self):
        """Test the cap stays within 4 * degeneracy + 2 after every update with the default rebuild interval"""
        rng = np.random.default_rng(8)
        n = 60
        g = OrientedGraph(n, strategy=build_strategy('amortized'))
        present = []
        for step in range(1500):
            # dense first half, then mostly deletions
            p_delete = 0.2 if step < 750 else 0.8
            if present and rng.random() < p_delete:
                u, v = present.pop(int(rng.integers(len(present))))
                g.delete_edge(u, v)
            else:
                u, v = (int(x) for x in rng.integers(n, size=2))
                if u == v or g.has_edge(u, v):
                    continue
                g.insert_edge(u, v)
                present.append((u, v))
            self.assertLessEqual(current_cap(g), 4 * core_degeneracy(n, g.undirected_edges()) + 2)
            self.assertLessEqual(g.max_outdegree(), current_cap(g))
        g.check_consistency()


if __name__ == '__main__':
    unittest.main()
