import logging
import warnings
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Tuple

import numpy as np

from .tag_graph import TagGraph, TagTable

logger = logging.getLogger(__name__)

DEFAULT_CLIQUE_WARNING_THRESHOLD = 1000


@dataclass
class BuildStats:
    """What happened while materializing the co-occurrence graph."""

    items: int = 0
    largest_item: int = 0
    oversized_items: int = 0


def _pairs(size: int, cache: Dict[int, Tuple[np.ndarray, np.ndarray]]):
    if size not in cache:
        cache[size] = np.triu_indices(size, k=1)
    return cache[size]


def build_cooccurrence_graph(
    items: Mapping[str, Iterable[str]],
    clique_warning_threshold: int = DEFAULT_CLIQUE_WARNING_THRESHOLD,
    stats: Optional[BuildStats] = None,
) -> Tuple[TagTable, TagGraph]:
    """Link all tags attributed to the same URL.

    Every item with ``t`` tags contributes the ``t(t-1)/2`` edges of a clique. An
    edge shared by several items is stored once. Tags are interned in sorted URL
    order and, within an item, sorted tag order, so the same items always produce
    the same ids.

    Args:
        items (Mapping[str, Iterable[str]]): per-URL tag sets (usually ItemTagSets)
        clique_warning_threshold (int): warn about items with more tags than this
        stats (BuildStats, optional): filled with item counts while building

    Returns:
        Tuple[TagTable, TagGraph]: the interned tags and the co-occurrence graph
    """
    stats = stats if stats is not None else BuildStats()
    table = TagTable()
    chunks = list()
    triu_cache = dict()

    for url in sorted(items):
        tags = sorted(set(items[url]))
        ids = np.fromiter((table.intern(t) for t in tags), dtype=np.int64, count=len(tags))
        stats.items += 1
        stats.largest_item = max(stats.largest_item, ids.size)

        if ids.size > clique_warning_threshold:
            stats.oversized_items += 1
            warnings.warn(
                f"Item {url} carries {ids.size} tags and expands to a clique of "
                f"{ids.size * (ids.size - 1) // 2} edges."
            )
        if ids.size < 2:
            continue
        left, right = _pairs(ids.size, triu_cache)
        chunks.append(np.column_stack([ids[left], ids[right]]))

    edges = np.concatenate(chunks) if chunks else np.empty((0, 2), dtype=np.int64)
    graph = TagGraph.from_edges(len(table), edges)
    logger.info(
        "Built co-occurrence graph from %d items: N=%d, M=%d",
        stats.items,
        graph.node_count,
        graph.edge_count,
    )
    return table, graph
