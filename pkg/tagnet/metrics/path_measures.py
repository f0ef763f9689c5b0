import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from joblib import Parallel, delayed
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path
from tqdm.autonotebook import tqdm

from ..errors import NoConnectedPairsError
from ..graph import TagGraph, connected_components
from .results import PathLengthResult

logger = logging.getLogger(__name__)

DEFAULT_SAMPLED_SOURCES = 1000
DEFAULT_EXACT_MAX_NODES = 20000
# distance cells per BFS task; 32 MB of float64 plus a 4 MB mask
CHUNK_ELEMENT_BUDGET = 2**22
APL_MODES = ("auto", "exact", "sampled")


@dataclass(frozen=True)
class PathLengthMode:
    """Either every node is a BFS source, or ``sources`` distinct nodes drawn with ``seed``."""

    kind: str = "exact"
    sources: Optional[int] = None
    seed: Optional[int] = None

    @classmethod
    def exact(cls) -> "PathLengthMode":
        return cls("exact")

    @classmethod
    def sampled(cls, sources: int = DEFAULT_SAMPLED_SOURCES, seed: int = 0) -> "PathLengthMode":
        if sources < 1:
            raise ValueError("Sampled path length needs at least one source.")
        return cls("sampled", int(sources), int(seed))


def resolve_apl_mode(
    n: int,
    requested: str = "auto",
    sources: int = DEFAULT_SAMPLED_SOURCES,
    seed: int = 0,
    exact_max_nodes: int = DEFAULT_EXACT_MAX_NODES,
) -> PathLengthMode:
    """Turn a mode name into a PathLengthMode; ``auto`` is exact up to ``exact_max_nodes``."""
    if requested not in APL_MODES:
        raise ValueError(f"Unknown path length mode {requested}. Specify one among: {APL_MODES}.")
    if requested == "exact" or (requested == "auto" and n <= exact_max_nodes):
        return PathLengthMode.exact()
    return PathLengthMode.sampled(sources, seed)


def _default_chunk_size(n: int) -> int:
    """Sources per task so that one chunk of distances holds about CHUNK_ELEMENT_BUDGET cells."""
    return max(1, CHUNK_ELEMENT_BUDGET // max(n, 1))


def _bfs_chunk(
    adjacency: csr_matrix, chunk: np.ndarray, is_source: np.ndarray
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, int]:
    """Unweighted shortest paths from every node of ``chunk``.

    Every node of ``chunk`` must be flagged in ``is_source``. Returns, per source,
    the distance sum and number of reachable targets, the number of reachable
    targets that are sources too, and the largest distance seen. The distance
    block is reduced in place; besides it only one boolean mask is allocated.
    """
    distances = shortest_path(
        adjacency, method="D", directed=False, unweighted=True, indices=chunk
    )
    reachable = np.isfinite(distances)
    np.nan_to_num(distances, copy=False, posinf=0.0)
    sums = distances.sum(axis=1).astype(np.int64)
    diameter = int(distances.max()) if distances.size else 0
    # each source reaches itself at distance 0
    counts = np.count_nonzero(reachable, axis=1).astype(np.int64) - 1
    np.logical_and(reachable, is_source[np.newaxis, :], out=reachable)
    source_hits = np.count_nonzero(reachable, axis=1).astype(np.int64) - 1
    return sums, counts, source_hits, diameter


def average_path_length(
    graph: TagGraph,
    mode: Optional[PathLengthMode] = None,
    lcc_only: bool = False,
    n_jobs: int = 1,
    chunk_size: Optional[int] = None,
    show_progress: bool = False,
) -> PathLengthResult:
    """Mean shortest-path length over all connected node pairs.

    Pairs in different components are not counted. In exact mode every node is a
    BFS source; in sampled mode ``mode.sources`` distinct nodes are drawn with a
    PCG64 generator seeded by ``mode.seed`` and the mean runs over every reachable
    (source, target) pair. Per-source work is spread over ``n_jobs`` joblib
    workers; distance sums are integers, so the result does not depend on the
    number of workers or on how sources are chunked.

    Args:
        graph (TagGraph): the graph
        mode (PathLengthMode, optional): exact (default) or sampled
        lcc_only (bool): restrict to the largest connected component
        n_jobs (int): number of joblib workers
        chunk_size (int, optional): sources handled per task, by default as many as
            keep one task within CHUNK_ELEMENT_BUDGET distance cells
        show_progress (bool): enable progress bar

    Returns:
        PathLengthResult: the mean, the number of pairs and how it was obtained
    """
    mode = mode or PathLengthMode.exact()
    if graph.edge_count == 0:
        raise NoConnectedPairsError("An edgeless graph has no connected pairs.")

    target = graph
    if lcc_only:
        labeling = connected_components(graph)
        target, _ = graph.subgraph(labeling.largest_component_nodes())

    n = target.node_count
    if mode.kind == "exact":
        sources = np.arange(n, dtype=np.int64)
    else:
        rng = np.random.Generator(np.random.PCG64(mode.seed))
        sources = np.sort(rng.choice(n, size=min(mode.sources, n), replace=False))
    is_source = np.zeros(n, dtype=bool)
    is_source[sources] = True

    adjacency = target.to_csr()
    chunk_size = chunk_size or _default_chunk_size(n)
    chunks = [sources[i : i + chunk_size] for i in range(0, sources.size, chunk_size)]
    logger.info(
        "Path length (%s): %d sources in %d chunks on %d worker(s)",
        mode.kind,
        sources.size,
        len(chunks),
        n_jobs,
    )
    outputs = Parallel(n_jobs=n_jobs)(
        delayed(_bfs_chunk)(adjacency, chunk, is_source)
        for chunk in tqdm(chunks, desc="BFS", leave=False, disable=not show_progress)
    )

    sums = np.concatenate([o[0] for o in outputs])
    counts = np.concatenate([o[1] for o in outputs])
    source_hits = int(sum(int(o[2].sum()) for o in outputs))
    diameter = max(o[3] for o in outputs)

    ordered_pairs = int(counts.sum())
    if ordered_pairs == 0:
        raise NoConnectedPairsError("No source reaches any other node.")
    value = int(sums.sum()) / ordered_pairs
    # pairs with both endpoints among the sources were seen twice
    pairs_counted = ordered_pairs - source_hits // 2

    if mode.kind == "exact":
        return PathLengthResult(
            value=value,
            pairs_counted=pairs_counted,
            mode="exact",
            lcc_only=lcc_only,
            diameter=diameter,
        )

    reached = counts > 0
    per_source = sums[reached] / counts[reached]
    standard_error = (
        float(np.std(per_source, ddof=1) / np.sqrt(per_source.size))
        if per_source.size > 1
        else None
    )
    return PathLengthResult(
        value=value,
        pairs_counted=pairs_counted,
        mode="sampled",
        sources=int(sources.size),
        seed=mode.seed,
        standard_error=standard_error,
        lcc_only=lcc_only,
        diameter=diameter,
    )
