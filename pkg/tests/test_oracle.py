#!/usr/bin/env python3
"""
Unit tests for the brute-force oracles
"""
import itertools
import unittest
from fractions import Fraction

import networkx as nx

from errors import DomainError, SizeLimit
from graph_store import Arc, OrientedGraph
from implicit_color import ColoringState, QueryReport, build_policy, query_color
from oracle import (
    brute_degeneracy, core_degeneracy, nash_williams_lb, orientation_violations,
    reconstruct_ap_invariant, trigger_pmf_analytic, verify_proper, verify_recursion_tree,
    vstar_ceiling,
)


def clique(n):
    return list(itertools.combinations(range(n), 2))


class TestVerifyProper(unittest.TestCase):

    def test_cases(self):
        self.assertEqual(verify_proper([(0, 1)], {0: 1, 1: 2}), [])
        self.assertEqual(verify_proper([(0, 1)], {0: 1, 1: 1}), [(0, 1)])
        self.assertEqual(verify_proper(clique(4), {0: 1, 1: 2, 2: 3, 3: 4}), [])

    def test_uncolored_endpoints_ignored(self):
        self.assertEqual(verify_proper([(0, 1), (1, 2)], {0: 1}), [])


class TestSubsetEnumeration(unittest.TestCase):
    """Test degeneracy and arboricity by subset enumeration"""

    def test_brute_degeneracy(self):
        cases = [
            (clique(3), 2),
            ([(0, i) for i in range(1, 6)], 1),
            ([(i, (i + 1) % 5) for i in range(5)], 2),
        ]
        for edges, expected in cases:
            with self.subTest(edges=edges):
                self.assertEqual(brute_degeneracy(edges), expected)

    def test_nash_williams(self):
        tree = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]
        self.assertEqual(nash_williams_lb(clique(4)), 2)
        self.assertEqual(nash_williams_lb(tree), 1)
        self.assertEqual(nash_williams_lb(clique(5)), 3)

    def test_isolated_nodes_count(self):
        self.assertEqual(brute_degeneracy([], nodes=range(4)), 0)

    def test_size_limit(self):
        edges = [(i, i + 1) for i in range(12)]
        with self.assertRaises(SizeLimit):
            brute_degeneracy(edges)
        with self.assertRaises(SizeLimit):
            nash_williams_lb(edges)

    def test_core_degeneracy_agrees(self):
        graph = nx.gnm_random_graph(11, 25, seed=1)
        self.assertEqual(core_degeneracy(11, graph.edges()), brute_degeneracy(list(graph.edges()), range(11)))
        self.assertEqual(core_degeneracy(5, []), 0)


class TestTriggerPmf(unittest.TestCase):
    """Test the analytic first-recursion distribution"""

    def test_uniform_entries(self):
        for d in (2, 3, 5):
            with self.subTest(d=d):
                pmf = trigger_pmf_analytic(d)
                self.assertEqual(len(pmf), 6 * d)
                self.assertEqual(set(pmf), {Fraction(1, 6 * d)})
                self.assertEqual(sum(pmf), 1)

    def test_small_d_rejected(self):
        with self.assertRaises(DomainError):
            trigger_pmf_analytic(1)

    def test_vstar_ceiling(self):
        self.assertEqual(vstar_ceiling(4096), 1200)
        self.assertEqual(vstar_ceiling(1024), 1000)


class TestApReconstruction(unittest.TestCase):
    """Test the processed-arc reconstruction"""

    def test_fresh_epoch(self):
        g = OrientedGraph(5)
        g.insert_edge(0, 1)
        state = ColoringState(5)
        self.assertTrue(reconstruct_ap_invariant(state, g))

    def test_after_sweep(self):
        graph = nx.gnm_random_graph(50, 120, seed=3)
        g = OrientedGraph(50)
        for u, v in graph.edges():
            g.insert_edge(u, v)
        state = ColoringState(50)
        policy = build_policy('rand', seed=3)
        for v in range(50):
            query_color(state, g, v, policy)

        self.assertTrue(reconstruct_ap_invariant(state, g))
        self.assertEqual(state.arcs_processed, g.edge_count())

    def test_detects_tampering(self):
        g = OrientedGraph(3)
        g.insert_edge(0, 1)
        state = ColoringState(3)
        query_color(state, g, 0, build_policy('det'))
        state.processed_in[1].append(2)
        self.assertFalse(reconstruct_ap_invariant(state, g))

    def test_size_limit(self):
        with self.assertRaises(SizeLimit):
            reconstruct_ap_invariant(ColoringState(201), OrientedGraph(201))


class TestRecursionTree(unittest.TestCase):
    """Test trigger-arc tree checks"""

    def test_valid_chain(self):
        report = QueryReport(node=0, color=1, vstar_size=3, trigger_arcs=[Arc(0, 1), Arc(1, 2)], epoch=1)
        self.assertEqual(verify_recursion_tree(report, [0, 1, 2]), [])

    def test_missing_arc(self):
        report = QueryReport(node=0, color=1, vstar_size=3, trigger_arcs=[Arc(0, 1)], epoch=1)
        self.assertTrue(verify_recursion_tree(report, [0, 1, 2]))

    def test_two_parents(self):
        report = QueryReport(node=0, color=1, vstar_size=3,
                             trigger_arcs=[Arc(0, 2), Arc(1, 2)], epoch=1)
        self.assertTrue(verify_recursion_tree(report, [0, 1, 2]))

    def test_already_colored(self):
        report = QueryReport(node=4, color=2, vstar_size=0, trigger_arcs=[], epoch=1)
        self.assertEqual(verify_recursion_tree(report, []), [])


class TestOrientationViolations(unittest.TestCase):

    def test_overflow_reported(self):
        g = OrientedGraph(4)
        for v in (1, 2, 3):
            g.add_arc(0, v)
        self.assertEqual(orientation_violations(g), [0])


if __name__ == '__main__':
    unittest.main()
