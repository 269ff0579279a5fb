#!/usr/bin/env python3
"""
Unit tests for workload replay, configuration and the coin experiment
"""
import json
import os
import unittest
from unittest.mock import patch

from errors import DomainError, InvariantViolation, ParseError
from harness import (
    DEFAULT_CONFIG, RunReport, coin_experiment, load_config, merge_config, run, run_many,
)
from tests.test_config import TestConfigMixin
from workload_gen import amortized_stress, gnm_sweep, vstar_stress


class TestConfig(unittest.TestCase, TestConfigMixin):
    """Test configuration loading and validation"""

    def setUp(self):
        self.setup_test_environment("config", coloring={"policy": "rand"})

    def tearDown(self):
        self.teardown_test_environment()

    def test_file_over_defaults(self):
        config = load_config('config.json')
        self.assertEqual(config['coloring']['policy'], 'rand')
        self.assertEqual(config['coloring']['palette_mult'], 9)

    def test_overrides_win(self):
        config = load_config('config.json', {"coloring": {"policy": "uniform", "palette_mult": None}})
        self.assertEqual(config['coloring']['policy'], 'uniform')
        self.assertEqual(config['coloring']['palette_mult'], 9)

    def test_default_path_optional(self):
        os.remove('config.json')
        self.assertEqual(load_config(), DEFAULT_CONFIG)

    def test_missing_explicit_file(self):
        with self.assertRaises(SystemExit) as cm:
            load_config('nope.json')
        self.assertEqual(cm.exception.code, 1)

    def test_invalid_json(self):
        with open('broken.json', 'w') as f:
            f.write('{"coloring": ')
        with self.assertRaises(SystemExit):
            load_config('broken.json')

    def test_validation(self):
        bad = [
            {"coloring": {"threshold_mult": 1}},
            {"coloring": {"palette_mult": 8}},
            {"orientation": {"cap_multiplier": 1}},
            {"orientation": {"rebuild_interval": 0}},
            {"partition": {"k": 0}},
        ]
        for overrides in bad:
            with self.subTest(overrides=overrides):
                with self.assertRaises(DomainError):
                    load_config('config.json', overrides)

    def test_merge_keeps_base(self):
        merged = merge_config(DEFAULT_CONFIG, {"run": {"seed": 9}})
        self.assertEqual(merged['run']['seed'], 9)
        self.assertEqual(DEFAULT_CONFIG['run']['seed'], 0)


class TestRun(unittest.TestCase, TestConfigMixin):
    """Test replaying workloads"""

    def setUp(self):
        self.setup_test_environment("run")

    def tearDown(self):
        self.teardown_test_environment()

    def test_single_edge(self):
        """Test that both endpoints of one edge get distinct colors"""
        path = self.write_events(2, ["+ 0 1", "? 0", "? 1"])
        report = run(path, self.config, out=self.config['run']['out'], verbose=False)

        records = self.read_report(self.config['run']['out'])
        self.assertEqual(len(records), 3)
        self.assertEqual([r['type'] for r in records], ['query', 'query', 'summary'])
        self.assertNotEqual(records[0]['color'], records[1]['color'])
        self.assertEqual(records[0]['line'], 3)
        self.assertEqual(report.exit_code, 0)

    def test_parse_error(self):
        path = self.write_events(2, ["? 5"])
        with self.assertRaises(ParseError) as cm:
            run(path, self.config, verbose=False)
        self.assertEqual(cm.exception.line_no, 2)

    def test_k4_static_sweep(self):
        """Test that K_4 under static orientation uses 4 colors at most 27"""
        lines = [f"+ {u} {v}" for u in range(4) for v in range(u + 1, 4)] + ["! all"]
        config = merge_config(self.config, {"orientation": {"strategy": "static"}})
        report = run(self.write_events(4, lines), config, verbose=False)

        colors = [r['color'] for r in report.records]
        self.assertEqual(len(set(colors)), 4)
        self.assertTrue(all(c <= 27 for c in colors))
        self.assertEqual(report.summary['conflicts'], 0)
        self.assertEqual(report.summary['sweeps'], 1)
        self.assertEqual(report.summary['distinct_colors'], 4)

    def test_edgeless_sweep(self):
        report = run(gnm_sweep(10, 0), self.config, verbose=False)
        self.assertEqual([r['color'] for r in report.records], [1] * 10)

    def test_vstar_stress_cascade(self):
        """Test that the trigger query pulls the whole center chain into V*"""
        report = run(vstar_stress(d=2, funnels=8), self.config, verbose=False)

        trigger = [r for r in report.records if r['node'] == 8 * 11][0]
        self.assertEqual(trigger['vstar_size'], 9)
        self.assertEqual(trigger['triggers'], 8)
        self.assertEqual(report.summary['vstar_max'], 9)
        self.assertEqual(report.exit_code, 0)

    def test_amortized_prefix_bound(self):
        """Test every query prefix on several families under the deterministic policy"""
        for family in ('path', 'star', 'wheel', 'grid'):
            with self.subTest(family=family):
                report = run(amortized_stress(100, family, seed=1), self.config, verbose=False)
                self.assertEqual(report.exit_code, 0)

    def test_policies_and_partitions(self):
        workload = gnm_sweep(150, 450, seed=8)
        for policy in ('det', 'rand', 'uniform'):
            for k in (1, 3):
                with self.subTest(policy=policy, k=k):
                    config = merge_config(self.config, {"coloring": {"policy": policy},
                                                        "partition": {"k": k}})
                    report = run(workload, config, verbose=False)
                    self.assertEqual(report.summary['conflicts'], 0)
                    self.assertEqual(report.summary['queries'], 150)

    def test_epoch_ratios(self):
        """Test that colored/queried counts are recorded per epoch"""
        path = self.write_events(6, ["+ 0 1", "? 0", "? 1", "+ 1 2", "? 2"])
        report = run(path, self.config, verbose=False)

        epochs = report.summary['epochs']
        self.assertEqual([e['epoch'] for e in epochs], [1, 2])
        self.assertEqual(epochs[0]['queried'], 2)
        self.assertEqual(epochs[1]['queried'], 1)

    def test_deterministic_output(self):
        """Test byte-identical reports across repeated runs"""
        workload = gnm_sweep(40, 100, seed=5)
        config = merge_config(self.config, {"coloring": {"policy": "rand"}, "run": {"seed": 5}})

        first = run(workload, config, out='a.jsonl', verbose=False)
        second = run(workload, config, out='b.jsonl', verbose=False)
        self.assertEqual(list(first.lines()), list(second.lines()))
        with open('a.jsonl', 'rb') as a, open('b.jsonl', 'rb') as b:
            self.assertEqual(a.read(), b.read())

    def test_timings_only_when_asked(self):
        workload = gnm_sweep(20, 30, seed=1)
        self.assertNotIn('timings', run(workload, self.config, verbose=False).summary)

        config = merge_config(self.config, {"run": {"timings": True}})
        timings = run(workload, config, verbose=False).summary['timings']
        self.assertEqual(set(timings), {'insert', 'sweep'})

    def test_partial_report_on_violation(self):
        """Test that a failed check still writes a report marking the violation"""
        path = self.write_events(3, ["+ 0 1", "? 0", "? 2"])
        out = self.config['run']['out']
        with patch('oracle.uncolored_count_violations', return_value=[1]):
            with self.assertRaises(InvariantViolation):
                run(path, self.config, out=out, verbose=False)

        records = self.read_report(out)
        self.assertEqual(records[-1]['type'], 'summary')
        self.assertEqual(records[-1]['invariant_violations'], 1)
        self.assertIn('line 3', records[-1]['error'])

    def test_run_many(self):
        """Test that worker processes return the same reports as serial runs, in job order"""
        jobs = [(gnm_sweep(30, 20 * (s + 1), seed=s), self.config) for s in range(4)]
        reports = run_many(jobs, max_workers=2)
        self.assertEqual(len(reports), 4)
        self.assertTrue(all(isinstance(r, RunReport) and r.exit_code == 0 for r in reports))
        for (workload, config), report in zip(jobs, reports):
            self.assertEqual(list(report.lines()), list(run(workload, config, verbose=False).lines()))

    def test_report_lines_are_sorted_json(self):
        report = run(gnm_sweep(5, 3, seed=1), self.config, verbose=False)
        for line in report.lines():
            obj = json.loads(line)
            self.assertEqual(list(obj), sorted(obj))


class TestCoinExperiment(unittest.TestCase):
    """Test the Monte Carlo of the randomized policy's coins"""

    def test_d2(self):
        result = coin_experiment(2, 1_000_000, seed=0)
        self.assertEqual(len(result.empirical), 12)
        self.assertAlmostEqual(sum(result.empirical), 1.0)
        self.assertLess(result.max_deviation, 0.002)

    def test_d5(self):
        result = coin_experiment(5, 1_000_000, seed=1)
        self.assertEqual(len(result.empirical), 30)
        self.assertLess(result.max_deviation, 0.002)

    def test_preconditions(self):
        with self.assertRaises(DomainError):
            coin_experiment(2, 1000)
        with self.assertRaises(DomainError):
            coin_experiment(1, 100_000)


if __name__ == '__main__':
    unittest.main()
