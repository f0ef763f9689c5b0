#!/usr/bin/env python

"""Tests for the seeded random graph generators."""

import math
import os
import tempfile
import unittest

import numpy as np
from numpy.testing import assert_array_equal

from tagnet.diagnostics import er_baseline, scale_free_verdict, small_world_verdict
from tagnet.errors import GeneratorSpecError
from tagnet.graph import TagTable, build_cooccurrence_graph, save_snapshot
from tagnet.metrics import (
    average_clustering,
    average_path_length,
    degree_distribution,
    fit_power_law,
    local_clustering,
    network_summary,
)
from tagnet.synth import GeneratorSpec
from tagnet.synth.generators import (
    BarabasiAlbertGenerator,
    ErdosRenyiGenerator,
    create_generator,
    generate,
    generate_ba,
    generate_er,
    generate_ws,
    graph_to_items,
)


class TestErdosRenyi(unittest.TestCase):
    def test_full_probability_is_complete(self):
        graph = generate_er(4, 1.0)
        self.assertEqual(graph.edge_count, 6)
        assert_array_equal(graph.degrees(), [3, 3, 3, 3])

    def test_zero_probability_is_empty(self):
        graph = generate_er(100, 0.0)
        self.assertEqual(graph.node_count, 100)
        self.assertEqual(graph.edge_count, 0)

    def test_edge_count(self):
        # expected 19990 edges, three standard deviations either side
        graph = generate_er(2000, 0.01, seed=1)
        self.assertTrue(abs(graph.edge_count - 19990) <= 3 * math.sqrt(19990 * 0.99))

    def test_matches_random_baseline(self):
        clustering, ratios = list(), list()
        for seed in range(10):
            graph = generate_er(2000, 0.01, seed=seed)
            summary = network_summary(graph)
            clustering.append(summary.clustering)
            ratios.append(summary.l / (math.log(2000) / math.log(summary.avg_degree)))
        self.assertTrue(0.005 <= np.mean(clustering) <= 0.015)
        self.assertTrue(0.75 <= np.mean(ratios) <= 1.5)


class TestWattsStrogatz(unittest.TestCase):
    def test_lattice_clustering(self):
        graph = generate_ws(10, 4, 0.0)
        self.assertEqual(graph.edge_count, 20)
        for node in range(10):
            self.assertAlmostEqual(local_clustering(graph, node), 0.5, delta=1e-12)

    def test_ring_path_length(self):
        self.assertAlmostEqual(average_path_length(generate_ws(10, 2, 0.0)).value, 25 / 9)

    def test_rewiring_keeps_edge_count(self):
        for beta in (0.1, 0.5, 1.0):
            graph = generate_ws(200, 6, beta, seed=3)
            self.assertEqual(graph.edge_count, 600)
            graph.validate()

    def test_small_world(self):
        # calibration: L/L_random is about 1.5 and C/C_random about 49
        for seed in range(5):
            graph = generate_ws(1000, 10, 0.1, seed=seed)
            summary = network_summary(graph)
            verdict = small_world_verdict(summary, er_baseline(1000, summary.avg_degree))
            self.assertTrue(verdict.small_world)
            self.assertGreater(verdict.c_ratio, 10)


class TestBarabasiAlbert(unittest.TestCase):
    def test_tree(self):
        graph = generate_ba(5, 1)
        self.assertEqual(graph.edge_count, 4)
        self.assertEqual(network_summary(graph).largest_component, 5)

    def test_edge_count(self):
        for n, m in [(10, 2), (50, 3), (200, 5)]:
            graph = generate_ba(n, m, seed=n)
            self.assertEqual(graph.edge_count, m * (m + 1) // 2 + (n - m - 1) * m)
            self.assertTrue((graph.degrees() >= m).all())

    def test_scale_free(self):
        # calibration over seeds 0-9: the raw histogram gives gamma of 1.98-2.08
        # with |r| of 0.92-0.94, pulled down by the sparse noisy tail; the CCDF
        # gives gamma of 2.86-2.93, close to the theoretical 3
        for seed in range(10):
            with self.subTest(seed=seed):
                dist = degree_distribution(generate_ba(10000, 3, seed=seed))
                fit = fit_power_law(dist)
                self.assertTrue(1.8 <= fit.gamma <= 2.3)
                self.assertGreaterEqual(abs(fit.r), 0.9)
                self.assertTrue(scale_free_verdict(fit).scale_free)
                ccdf_fit = fit_power_law(dist, target="ccdf")
                self.assertTrue(2.2 <= ccdf_fit.gamma <= 3.4)


class TestGeneratorSpec(unittest.TestCase):
    def test_invalid_parameters(self):
        invalid = [
            GeneratorSpec("er", 10, p=1.5),
            GeneratorSpec("er", 10, p=-0.1),
            GeneratorSpec("er", 0, p=0.5),
            GeneratorSpec("er", 10, seed=-1, p=0.5),
            GeneratorSpec("er", 10, seed=2**64, p=0.5),
            GeneratorSpec("ws", 10, k_ring=3, beta=0.1),
            GeneratorSpec("ws", 10, k_ring=10, beta=0.1),
            GeneratorSpec("ws", 10, k_ring=4, beta=1.1),
            GeneratorSpec("ba", 10, m=0),
            GeneratorSpec("ba", 10, m=10),
            GeneratorSpec("sbm", 10),
        ]
        for spec in invalid:
            with self.subTest(spec=spec):
                with self.assertRaises(GeneratorSpecError):
                    create_generator(spec)

    def test_spec_errors_are_value_errors(self):
        with self.assertRaises(ValueError):
            generate_ba(3, 3)

    def test_model_must_match_generator(self):
        with self.assertRaises(GeneratorSpecError):
            BarabasiAlbertGenerator(GeneratorSpec("er", 10, p=0.1))

    def test_create_generator(self):
        generator = create_generator(GeneratorSpec("er", 10, p=0.2))
        self.assertIsInstance(generator, ErdosRenyiGenerator)
        self.assertEqual(generator(), generator.generate())

    def test_metadata(self):
        metadata = GeneratorSpec("ws", 100, seed=7, k_ring=4, beta=0.2).metadata()
        self.assertDictEqual(
            metadata,
            {"model": "ws", "n": 100, "k_ring": 4, "beta": 0.2, "seed": 7, "rng": "PCG64"},
        )


class TestDeterminism(unittest.TestCase):
    specs = [
        GeneratorSpec("er", 300, seed=11, p=0.02),
        GeneratorSpec("ws", 300, seed=11, k_ring=6, beta=0.3),
        GeneratorSpec("ba", 300, seed=11, m=2),
    ]

    def test_same_seed_same_snapshot(self):
        with tempfile.TemporaryDirectory() as tmp:
            for spec in self.specs:
                contents = list()
                for run in range(2):
                    path = os.path.join(tmp, f"{spec.model}-{run}.graph")
                    graph = generate(spec)
                    save_snapshot(path, TagTable.synthetic(spec.n), graph, spec.metadata())
                    with open(path, "rb") as f:
                        contents.append(f.read())
                self.assertEqual(contents[0], contents[1])

    def test_different_seeds_differ(self):
        self.assertNotEqual(generate_er(300, 0.02, seed=1), generate_er(300, 0.02, seed=2))

    def test_outputs_are_valid(self):
        for spec in self.specs:
            graph = generate(spec)
            graph.validate()
            self.assertEqual(graph.node_count, spec.n)


class TestGraphToItems(unittest.TestCase):
    def _labeled_edges(self, table, graph):
        labels = table.tags
        return {frozenset((labels[i], labels[j])) for i, j in graph.edges().tolist()}

    def test_rebuild(self):
        graph = generate_er(60, 0.05, seed=4)
        original = TagTable.synthetic(60)
        table, rebuilt = build_cooccurrence_graph(graph_to_items(graph))
        self.assertEqual(rebuilt.node_count, graph.node_count)
        self.assertEqual(rebuilt.edge_count, graph.edge_count)
        self.assertSetEqual(
            self._labeled_edges(table, rebuilt), self._labeled_edges(original, graph)
        )
        self.assertAlmostEqual(
            average_clustering(rebuilt).average, average_clustering(graph).average
        )

    def test_isolated_nodes_survive(self):
        graph = generate_er(5, 0.0)
        items = graph_to_items(graph)
        self.assertEqual(len(items), 5)
        _, rebuilt = build_cooccurrence_graph(items)
        self.assertEqual(rebuilt.isolated_count(), 5)


if __name__ == "__main__":
    unittest.main()
