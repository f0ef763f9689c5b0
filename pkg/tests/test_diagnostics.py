#!/usr/bin/env python

"""Tests for random-graph baselines, verdicts and the top degree table."""

import math
import os
import time
import unittest

import numpy as np

from tagnet import NetworkAnalysis
from tagnet.diagnostics import (
    er_baseline,
    scale_free_verdict,
    small_world_verdict,
    top_k_degree,
)
from tagnet.errors import BaselineUndefinedError
from tagnet.graph import TagGraph, TagTable
from tagnet.metrics import NetworkSummary, PathLengthResult, PowerLawFit, VerdictThresholds
from tagnet.synth.generators import generate_er

# measured statistics of a large folksonomy tag network
PUBLISHED_N = 9804
PUBLISHED_AVG_DEGREE = 11.0
PUBLISHED_C = 0.06
PUBLISHED_L = 3.40


def summary_with(l, clustering, n=PUBLISHED_N, avg_degree=PUBLISHED_AVG_DEGREE):
    return NetworkSummary(
        n=n,
        m=int(round(n * avg_degree / 2)),
        avg_degree=avg_degree,
        clustering=clustering,
        path_length=PathLengthResult(value=l, pairs_counted=1),
    )


def fit_with(gamma, r):
    return PowerLawFit(gamma=gamma, r=r, k_min=1, points_used=10, slope=-gamma, intercept=0.0)


class TestErBaseline(unittest.TestCase):
    def test_published_network(self):
        baseline = er_baseline(PUBLISHED_N, PUBLISHED_AVG_DEGREE)
        self.assertTrue(3.82 <= baseline.l_random <= 3.85)
        self.assertTrue(0.00111 <= baseline.c_random <= 0.00113)

    def test_e(self):
        self.assertAlmostEqual(er_baseline(math.e, math.e).l_random, 1.0, delta=1e-12)

    def test_hundred_nodes(self):
        baseline = er_baseline(100, 10)
        self.assertAlmostEqual(baseline.l_random, 2.0, delta=1e-12)
        self.assertAlmostEqual(baseline.c_random, 0.1, delta=1e-12)

    def test_scale_consistent(self):
        for n, k in [(100, 10.0), (9804, 11.0), (2000, 19.99)]:
            self.assertAlmostEqual(er_baseline(n, k).c_random * n, k, delta=1e-9)

    def test_undefined(self):
        with self.assertRaises(BaselineUndefinedError):
            er_baseline(100, 1.0)
        with self.assertRaises(BaselineUndefinedError):
            er_baseline(1, 3.0)
        with self.assertRaises(ValueError):
            er_baseline(100, 0.5)


class TestVerdicts(unittest.TestCase):
    def setUp(self):
        self.baseline = er_baseline(PUBLISHED_N, PUBLISHED_AVG_DEGREE)

    def test_published_network_is_small_world(self):
        verdict = small_world_verdict(summary_with(PUBLISHED_L, PUBLISHED_C), self.baseline)
        self.assertTrue(verdict.small_world)
        self.assertTrue(0.88 <= verdict.l_ratio <= 0.90)
        self.assertTrue(50 <= verdict.c_ratio <= 57)

    def test_random_graph_is_not_small_world(self):
        summary = summary_with(self.baseline.l_random, self.baseline.c_random)
        verdict = small_world_verdict(summary, self.baseline)
        self.assertFalse(verdict.small_world)
        self.assertAlmostEqual(verdict.c_ratio, 1.0, delta=1e-12)

    def test_thresholds_only_flip_the_boolean(self):
        summary = summary_with(PUBLISHED_L, PUBLISHED_C)
        default = small_world_verdict(summary, self.baseline)
        strict = small_world_verdict(
            summary, self.baseline, VerdictThresholds(max_l_ratio=0.5)
        )
        self.assertTrue(default.small_world)
        self.assertFalse(strict.small_world)
        self.assertEqual(default.l_ratio, strict.l_ratio)
        self.assertEqual(default.c_ratio, strict.c_ratio)

    def test_small_world_needs_measurements(self):
        with self.assertRaises(ValueError):
            small_world_verdict(summary_with(PUBLISHED_L, None), self.baseline)

    def test_scale_free(self):
        self.assertTrue(scale_free_verdict(fit_with(1.418, -0.97)).scale_free)
        self.assertTrue(scale_free_verdict(fit_with(2.0, -1.0)).scale_free)
        self.assertFalse(scale_free_verdict(fit_with(0.5, -0.3)).scale_free)

    def test_scale_free_needs_decay(self):
        verdict = scale_free_verdict(fit_with(-1.0, 0.99))
        self.assertFalse(verdict.scale_free)
        self.assertEqual(verdict.abs_r, 0.99)

    def test_scale_free_threshold(self):
        fit = fit_with(2.5, -0.95)
        self.assertFalse(scale_free_verdict(fit, VerdictThresholds(min_abs_r=0.96)).scale_free)


class TestTopKDegree(unittest.TestCase):
    def test_ties_by_tag(self):
        graph = TagGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        table = TagTable(["c", "a", "b"])
        self.assertListEqual(top_k_degree(graph, table, 2), [(2, "a"), (2, "b")])

    def test_k_larger_than_n(self):
        graph = TagGraph.from_edges(3, [(0, 1)])
        table = TagTable(["x", "y", "z"])
        self.assertListEqual(
            top_k_degree(graph, table, 10), [(1, "x"), (1, "y"), (0, "z")]
        )

    def test_k_must_be_positive(self):
        graph = TagGraph.from_edges(1, [])
        with self.assertRaises(ValueError):
            top_k_degree(graph, TagTable(["a"]), 0)

    def test_sorted_on_random_graphs(self):
        for seed in range(10):
            graph = generate_er(80, 0.05, seed=seed)
            ranking = top_k_degree(graph, TagTable.synthetic(80), 20)
            keys = [(-d, tag) for d, tag in ranking]
            self.assertListEqual(keys, sorted(keys))
            self.assertEqual(ranking[0][0], int(graph.degrees().max()))


class TestNetworkAnalysis(unittest.TestCase):
    def test_k4(self):
        graph = TagGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        with self.assertWarns(UserWarning):
            summary = NetworkAnalysis().analyze(graph, TagTable(["a", "b", "c", "d"]))
        self.assertEqual(summary.clustering, 1.0)
        self.assertEqual(summary.l, 1.0)
        self.assertIsNone(summary.fit)
        self.assertIsNone(summary.verdict.scale_free)
        self.assertIsNotNone(summary.verdict.small_world)
        self.assertListEqual(summary.top_tags[:2], [(3, "a"), (3, "b")])

    def test_er_graph(self):
        graph = generate_er(400, 0.03, seed=2)
        summary = NetworkAnalysis(top_k=5).analyze(graph)
        self.assertIsNotNone(summary.baseline)
        self.assertIsNotNone(summary.fit)
        self.assertIsNotNone(summary.ccdf_fit)
        self.assertEqual(summary.ccdf_fit.target, "ccdf")
        self.assertFalse(summary.verdict.small_world.small_world)
        self.assertEqual(len(summary.top_tags), 5)

    def test_empty_graph(self):
        with self.assertWarns(UserWarning):
            summary = NetworkAnalysis().analyze(TagGraph.from_edges(0, []))
        self.assertEqual(summary.n, 0)
        self.assertIsNone(summary.avg_degree)
        self.assertIsNone(summary.distribution)
        self.assertIsNone(summary.verdict.small_world)
        self.assertListEqual(summary.top_tags, [])

    def test_strict(self):
        with self.assertRaises(ValueError):
            NetworkAnalysis().analyze(TagGraph.from_edges(3, []), strict=True)

    def test_verdicts_are_reproducible(self):
        graph = generate_er(300, 0.04, seed=8)
        first = NetworkAnalysis().analyze(graph)
        second = NetworkAnalysis().analyze(graph)
        self.assertEqual(first.verdict, second.verdict)
        np.testing.assert_array_equal(first.distribution.counts, second.distribution.counts)


@unittest.skipUnless(os.environ.get("TAGNET_SLOW_TESTS"), "set TAGNET_SLOW_TESTS to run")
class TestExactAnalysisAtScale(unittest.TestCase):
    def test_ten_thousand_nodes_within_a_minute(self):
        graph = generate_er(10000, 11 / 9999, seed=3)
        self.assertTrue(52000 <= graph.edge_count <= 58000)
        start = time.perf_counter()
        summary = NetworkAnalysis(apl_mode="exact").analyze(graph)
        elapsed = time.perf_counter() - start
        self.assertLess(elapsed, 60.0)
        self.assertEqual(summary.path_length.mode, "exact")
        self.assertFalse(summary.verdict.small_world.small_world)


if __name__ == "__main__":
    unittest.main()
