from dataclasses import dataclass

import numpy as np
from scipy.sparse.csgraph import connected_components as _scipy_components

from .tag_graph import TagGraph


@dataclass
class ComponentLabeling:
    """Connected components of a TagGraph.

    Component ``c`` has size ``sizes[c]``; components are numbered by decreasing
    size, ties keeping the order of their smallest node id.
    """

    labels: np.ndarray
    sizes: np.ndarray

    @property
    def count(self) -> int:
        return int(self.sizes.size)

    @property
    def largest_size(self) -> int:
        return int(self.sizes[0]) if self.sizes.size else 0

    def nodes_of(self, component: int) -> np.ndarray:
        return np.flatnonzero(self.labels == component)

    def largest_component_nodes(self) -> np.ndarray:
        return self.nodes_of(0)


def connected_components(graph: TagGraph) -> ComponentLabeling:
    """Label every node with its connected component."""
    if graph.node_count == 0:
        empty = np.empty(0, dtype=np.int64)
        return ComponentLabeling(labels=empty, sizes=empty)

    _, raw_labels = _scipy_components(graph.to_csr(), directed=False)
    raw_sizes = np.bincount(raw_labels)
    order = np.argsort(-raw_sizes, kind="stable")
    relabel = np.empty_like(order)
    relabel[order] = np.arange(order.size)
    return ComponentLabeling(
        labels=relabel[raw_labels].astype(np.int64),
        sizes=raw_sizes[order].astype(np.int64),
    )
