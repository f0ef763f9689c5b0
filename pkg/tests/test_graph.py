#!/usr/bin/env python

"""Tests for graph construction, components and snapshots."""

import itertools
import os
import tempfile
import unittest

import numpy as np
from numpy.testing import assert_array_equal

from tagnet.errors import GraphInvariantError, NodeIndexError, SnapshotFormatError
from tagnet.graph import (
    BuildStats,
    TagGraph,
    TagTable,
    build_cooccurrence_graph,
    connected_components,
    degree,
    load_snapshot,
    save_snapshot,
)
from tagnet.ingest.normalization import ItemTagSets


class TestConstruction(unittest.TestCase):
    def test_shared_url_becomes_clique(self):
        table, graph = build_cooccurrence_graph(ItemTagSets({"u": ["a", "b", "b", "c"]}))
        self.assertEqual(graph.node_count, 3)
        self.assertEqual(graph.edge_count, 3)
        self.assertListEqual(table.tags, ["a", "b", "c"])

    def test_separate_urls(self):
        _, graph = build_cooccurrence_graph(ItemTagSets({"u1": ["a", "b"], "u2": ["b", "c"]}))
        self.assertEqual(graph.edge_count, 2)
        self.assertEqual(degree(graph, 1), 2)

    def test_repeated_pairs_collapse(self):
        _, graph = build_cooccurrence_graph(ItemTagSets({"u1": ["a", "b"], "u2": ["b", "a"]}))
        self.assertEqual(graph.edge_count, 1)

    def test_ids_follow_sorted_urls_then_tags(self):
        table, _ = build_cooccurrence_graph(ItemTagSets({"u2": ["z", "y"], "u1": ["b", "a"]}))
        self.assertListEqual(table.tags, ["a", "b", "y", "z"])
        self.assertEqual(table.id_of("y"), 2)

    def test_single_tag_item_is_isolated(self):
        _, graph = build_cooccurrence_graph(ItemTagSets({"u1": ["a", "b"], "u2": ["solo"]}))
        self.assertEqual(graph.node_count, 3)
        self.assertEqual(graph.isolated_count(), 1)

    def test_empty_items(self):
        table, graph = build_cooccurrence_graph(ItemTagSets())
        self.assertEqual(len(table), 0)
        self.assertEqual(graph.node_count, 0)
        self.assertEqual(graph.edge_count, 0)

    def test_oversized_item_warns(self):
        stats = BuildStats()
        with self.assertWarns(UserWarning):
            build_cooccurrence_graph(
                ItemTagSets({"u": ["a", "b", "c"]}), clique_warning_threshold=2, stats=stats
            )
        self.assertEqual(stats.oversized_items, 1)
        self.assertEqual(stats.largest_item, 3)

    def test_adjacency_is_valid(self):
        _, graph = build_cooccurrence_graph(
            ItemTagSets({"u1": ["a", "b", "c", "d"], "u2": ["d", "e"], "u3": ["f"]})
        )
        graph.validate()
        self.assertEqual(int(graph.degrees().sum()), 2 * graph.edge_count)
        assert_array_equal(graph.neighbors(3), [0, 1, 2, 4])


def random_items(seed, max_tags=50):
    rng = np.random.default_rng(seed)
    vocabulary = [f"tag{i}" for i in range(int(rng.integers(1, max_tags + 1)))]
    items = dict()
    for url in range(int(rng.integers(1, 30))):
        size = int(rng.integers(0, min(8, len(vocabulary)) + 1))
        items[f"http://{url}"] = [vocabulary[i] for i in rng.integers(0, len(vocabulary), size)]
    return ItemTagSets(items)


def naive_adjacency(items, table):
    adjacency = np.zeros((len(table), len(table)), dtype=bool)
    for tags in items.values():
        for a, b in itertools.combinations(sorted(set(tags)), 2):
            adjacency[table.id_of(a), table.id_of(b)] = True
            adjacency[table.id_of(b), table.id_of(a)] = True
    return adjacency


class TestConstructionAgainstMatrix(unittest.TestCase):
    def test_random_items(self):
        for seed in range(40):
            with self.subTest(seed=seed):
                items = random_items(seed)
                table, graph = build_cooccurrence_graph(items)
                graph.validate()
                self.assertSetEqual(set(table), {t for tags in items.values() for t in tags})
                assert_array_equal(graph.to_csr().toarray() != 0, naive_adjacency(items, table))

    def test_same_items_same_graph(self):
        for seed in range(10):
            with self.subTest(seed=seed):
                first_table, first = build_cooccurrence_graph(random_items(seed))
                second_table, second = build_cooccurrence_graph(random_items(seed))
                self.assertListEqual(first_table.tags, second_table.tags)
                self.assertEqual(first, second)
                assert_array_equal(first.indptr, second.indptr)
                assert_array_equal(first.indices, second.indices)

    def test_single_item_is_a_clique(self):
        rng = np.random.default_rng(17)
        for t in rng.integers(1, 51, size=15).tolist():
            with self.subTest(t=t):
                _, graph = build_cooccurrence_graph(
                    ItemTagSets({"u": [f"tag{i}" for i in range(t)]})
                )
                self.assertEqual(graph.node_count, t)
                self.assertEqual(graph.edge_count, t * (t - 1) // 2)
                assert_array_equal(graph.degrees(), np.full(t, t - 1))


class TestTagGraph(unittest.TestCase):
    def setUp(self):
        self.graph = TagGraph.from_edges(4, [(1, 0), (2, 1), (0, 2), (3, 2)])

    def test_edges_are_canonical(self):
        assert_array_equal(self.graph.edges(), [[0, 1], [0, 2], [1, 2], [2, 3]])

    def test_degrees(self):
        assert_array_equal(self.graph.degrees(), [2, 2, 3, 1])

    def test_out_of_range_node(self):
        with self.assertRaises(NodeIndexError):
            self.graph.degree(4)
        with self.assertRaises(IndexError):
            self.graph.neighbors(-1)

    def test_self_loop_rejected(self):
        with self.assertRaises(GraphInvariantError):
            TagGraph.from_edges(3, [(1, 1)])

    def test_endpoint_out_of_range_rejected(self):
        with self.assertRaises(GraphInvariantError):
            TagGraph.from_edges(3, [(0, 3)])

    def test_validate_detects_asymmetry(self):
        broken = TagGraph(np.array([0, 1, 1, 2]), np.array([1, 0]))
        with self.assertRaises(GraphInvariantError):
            broken.validate()

    def test_arrays_are_read_only(self):
        with self.assertRaises(ValueError):
            self.graph.indices[0] = 3

    def test_subgraph(self):
        sub, kept = self.graph.subgraph([0, 1, 2])
        assert_array_equal(kept, [0, 1, 2])
        self.assertEqual(sub.edge_count, 3)

    def test_tag_table(self):
        table = TagTable(["web", "blog"])
        self.assertEqual(table.lookup(1), "blog")
        self.assertEqual(table.intern("web"), 0)
        self.assertIn("blog", table)
        with self.assertRaises(NodeIndexError):
            table.lookup(2)
        self.assertListEqual(TagTable.synthetic(3).tags, ["n0", "n1", "n2"])


class TestComponents(unittest.TestCase):
    def test_labels_by_decreasing_size(self):
        graph = TagGraph.from_edges(6, [(0, 1), (2, 3), (3, 4)])
        labeling = connected_components(graph)
        self.assertEqual(labeling.count, 3)
        self.assertEqual(labeling.largest_size, 3)
        assert_array_equal(labeling.labels, [1, 1, 0, 0, 0, 2])
        assert_array_equal(labeling.largest_component_nodes(), [2, 3, 4])

    def test_ties_keep_node_order(self):
        labeling = connected_components(TagGraph.from_edges(5, [(0, 1), (2, 3)]))
        assert_array_equal(labeling.labels, [0, 0, 1, 1, 2])
        assert_array_equal(labeling.sizes, [2, 2, 1])

    def test_empty_graph(self):
        labeling = connected_components(TagGraph.from_edges(0, []))
        self.assertEqual(labeling.count, 0)
        self.assertEqual(labeling.largest_size, 0)


class TestSnapshot(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tmp.name, "net.graph")
        self.table = TagTable(["web", "tab\there", "new\nline", "back\\slash"])
        self.graph = TagGraph.from_edges(4, [(0, 1), (1, 2), (0, 3)])

    def tearDown(self):
        self.tmp.cleanup()

    def _write(self, text):
        with open(self.path, "w", encoding="utf-8", newline="") as f:
            f.write(text)

    def test_round_trip(self):
        save_snapshot(self.path, self.table, self.graph, {"rng": "PCG64", "seed": 42})
        table, graph, metadata = load_snapshot(self.path)
        self.assertEqual(table, self.table)
        self.assertEqual(graph, self.graph)
        self.assertDictEqual(metadata, {"rng": "PCG64", "seed": "42"})

    def test_layout(self):
        save_snapshot(self.path, TagTable(["a", "b"]), TagGraph.from_edges(2, [(0, 1)]))
        with open(self.path, "rb") as f:
            self.assertEqual(f.read(), b"tagnet-graph v1 2 1\n0 1\n0\ta\n1\tb\n")

    def test_save_is_byte_stable(self):
        save_snapshot(self.path, self.table, self.graph)
        with open(self.path, "rb") as f:
            first = f.read()
        table, graph, _ = load_snapshot(self.path)
        save_snapshot(self.path, table, graph)
        with open(self.path, "rb") as f:
            self.assertEqual(f.read(), first)

    def test_table_size_must_match(self):
        with self.assertRaises(ValueError):
            save_snapshot(self.path, TagTable(["a"]), self.graph)

    def test_bad_header(self):
        self._write("not-a-graph v1 1 0\n0\ta\n")
        with self.assertRaises(SnapshotFormatError):
            load_snapshot(self.path)

    def test_unordered_edge(self):
        self._write("tagnet-graph v1 2 1\n1 0\n0\ta\n1\tb\n")
        with self.assertRaises(SnapshotFormatError):
            load_snapshot(self.path)

    def test_wrong_line_count(self):
        self._write("tagnet-graph v1 2 1\n0 1\n0\ta\n")
        with self.assertRaises(SnapshotFormatError):
            load_snapshot(self.path)

    def test_duplicate_edge(self):
        self._write("tagnet-graph v1 2 2\n0 1\n0 1\n0\ta\n1\tb\n")
        with self.assertRaises(SnapshotFormatError):
            load_snapshot(self.path)

    def test_duplicate_tag(self):
        self._write("tagnet-graph v1 2 0\n0\ta\n1\ta\n")
        with self.assertRaises(SnapshotFormatError):
            load_snapshot(self.path)


if __name__ == "__main__":
    unittest.main()
