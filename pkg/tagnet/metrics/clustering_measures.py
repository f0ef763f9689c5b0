import math
from typing import Optional

import numpy as np
from tqdm.autonotebook import tqdm

from ..errors import UndefinedClusteringError
from ..graph import TagGraph
from .results import ClusteringResult


def _edges_among_neighbors(graph: TagGraph, node: int) -> int:
    """E_i: number of edges between the neighbors of ``node``."""
    neighbors = graph.neighbors(node)
    if neighbors.size < 2:
        return 0

    # concatenate the (sorted) adjacency rows of all neighbors
    starts = graph.indptr[neighbors]
    lengths = graph.indptr[neighbors + 1] - starts
    offsets = np.cumsum(lengths) - lengths
    positions = np.repeat(starts - offsets, lengths) + np.arange(lengths.sum())
    candidates = graph.indices[positions]

    # intersect each row with the sorted neighbor list
    slots = np.searchsorted(neighbors, candidates)
    slots[slots == neighbors.size] = 0
    hits = int((neighbors[slots] == candidates).sum())
    # every edge among neighbors is seen from both of its endpoints
    return hits // 2


def triangle_counts(graph: TagGraph) -> np.ndarray:
    """E_i for every node."""
    return np.fromiter(
        (_edges_among_neighbors(graph, i) for i in range(graph.node_count)),
        dtype=np.int64,
        count=graph.node_count,
    )


def local_clustering(graph: TagGraph, node: int) -> Optional[float]:
    """C_i = 2 E_i / (k_i (k_i - 1)), or None when k_i < 2."""
    k = graph.degree(node)
    if k < 2:
        return None
    return 2.0 * _edges_among_neighbors(graph, node) / (k * (k - 1))


def average_clustering(
    graph: TagGraph, zero_for_low_degree: bool = False, show_progress: bool = False
) -> ClusteringResult:
    """Mean clustering coefficient.

    Args:
        graph (TagGraph): the graph
        zero_for_low_degree (bool): count nodes with k < 2 as C_i = 0 instead of
            leaving them out of the mean. Defaults to False.
        show_progress (bool): enable progress bar

    Returns:
        ClusteringResult: per-node values, the mean and how many nodes were undefined
    """
    degrees = graph.degrees()
    if not (degrees >= 2).any():
        raise UndefinedClusteringError(
            "The clustering coefficient needs at least one node with degree >= 2."
        )

    local = np.full(graph.node_count, np.nan)
    for node in tqdm(
        np.flatnonzero(degrees >= 2),
        desc="Clustering",
        leave=False,
        disable=not show_progress,
    ):
        local[node] = local_clustering(graph, int(node))

    undefined = int(np.isnan(local).sum())
    if zero_for_low_degree:
        values = np.nan_to_num(local, nan=0.0)
    else:
        values = local[~np.isnan(local)]
    return ClusteringResult(
        local=local,
        average=math.fsum(values) / values.size,
        undefined_count=undefined,
        zero_for_low_degree=zero_for_low_degree,
    )
