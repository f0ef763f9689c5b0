import logging
import warnings
from typing import Optional

from ..errors import NoConnectedPairsError, UndefinedClusteringError
from ..graph import TagGraph, connected_components
from .clustering_measures import average_clustering
from .path_measures import PathLengthMode, average_path_length
from .results import NetworkSummary

logger = logging.getLogger(__name__)


def network_summary(
    graph: TagGraph,
    apl_mode: Optional[PathLengthMode] = None,
    lcc_only: bool = False,
    zero_for_low_degree: bool = False,
    n_jobs: int = 1,
    strict: bool = True,
    show_progress: bool = False,
) -> NetworkSummary:
    """Measure N, M, <k>, C, l and the component structure of a graph.

    Args:
        graph (TagGraph): the graph
        apl_mode (PathLengthMode, optional): exact (default) or sampled path lengths
        lcc_only (bool): average path lengths over the largest component only
        zero_for_low_degree (bool): count nodes with k < 2 as C_i = 0
        n_jobs (int): workers for the path length computation
        strict (bool): raise when C or l is undefined. When False the field is left
            ``None`` and a warning is issued instead.
        show_progress (bool): enable progress bars

    Returns:
        NetworkSummary: the measured statistics
    """
    n, m = graph.node_count, graph.edge_count
    labeling = connected_components(graph)
    summary = NetworkSummary(
        n=n,
        m=m,
        avg_degree=2.0 * m / n if n else None,
        isolated_nodes=graph.isolated_count(),
        component_count=labeling.count,
        largest_component=labeling.largest_size,
    )

    try:
        result = average_clustering(
            graph, zero_for_low_degree=zero_for_low_degree, show_progress=show_progress
        )
        summary.clustering_result = result
        summary.clustering = result.average
    except UndefinedClusteringError as e:
        if strict:
            raise
        warnings.warn(f"Clustering left undefined: {e}")

    try:
        summary.path_length = average_path_length(
            graph,
            mode=apl_mode,
            lcc_only=lcc_only,
            n_jobs=n_jobs,
            show_progress=show_progress,
        )
    except NoConnectedPairsError as e:
        if strict:
            raise
        warnings.warn(f"Average path length left undefined: {e}")

    logger.info(
        "Summary: N=%d, M=%d, C=%s, l=%s", n, m, summary.clustering, summary.l
    )
    return summary
