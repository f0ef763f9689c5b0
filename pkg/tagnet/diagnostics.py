"""Random-graph baselines, small-world and scale-free verdicts, top degree tags."""

import heapq
import math
from typing import List, Optional, Tuple

from .errors import BaselineUndefinedError
from .graph import TagGraph, TagTable
from .metrics import (
    ErBaseline,
    NetworkSummary,
    PowerLawFit,
    ScaleFreeVerdict,
    SmallWorldVerdict,
    VerdictThresholds,
)


def er_baseline(n: int, avg_degree: float) -> ErBaseline:
    """Expected l and C of an Erdős–Rényi graph with ``n`` nodes and mean degree ``avg_degree``.

    l_random = ln n / ln <k> and C_random = <k> / n.
    """
    if n <= 1:
        raise BaselineUndefinedError(f"The random baseline needs N > 1, got N={n}.")
    if avg_degree <= 1:
        raise BaselineUndefinedError(
            f"The random baseline needs <k> > 1, got <k>={avg_degree}."
        )
    return ErBaseline(
        l_random=math.log(n) / math.log(avg_degree),
        c_random=avg_degree / n,
    )


def small_world_verdict(
    summary: NetworkSummary,
    baseline: ErBaseline,
    thresholds: Optional[VerdictThresholds] = None,
) -> SmallWorldVerdict:
    """l comparable to l_random while C far exceeds C_random.

    The network is small-world when ``l / l_random <= max_l_ratio`` and
    ``C / C_random >= min_c_ratio``.
    """
    thresholds = thresholds or VerdictThresholds()
    if summary.l is None or summary.clustering is None:
        raise ValueError("The small-world verdict needs both l and C.")

    l_ratio = summary.l / baseline.l_random
    c_ratio = summary.clustering / baseline.c_random
    return SmallWorldVerdict(
        small_world=l_ratio <= thresholds.max_l_ratio and c_ratio >= thresholds.min_c_ratio,
        l_ratio=l_ratio,
        c_ratio=c_ratio,
    )


def scale_free_verdict(
    fit: PowerLawFit, thresholds: Optional[VerdictThresholds] = None
) -> ScaleFreeVerdict:
    """A decaying degree distribution that is linear on log-log axes."""
    thresholds = thresholds or VerdictThresholds()
    abs_r = abs(fit.r)
    return ScaleFreeVerdict(
        scale_free=abs_r >= thresholds.min_abs_r and fit.gamma > 0,
        gamma=fit.gamma,
        abs_r=abs_r,
    )


def top_k_degree(graph: TagGraph, table: TagTable, k: int) -> List[Tuple[int, str]]:
    """The ``k`` highest-degree tags as (degree, tag), ties by ascending tag."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}.")
    if len(table) != graph.node_count:
        raise ValueError(
            f"Tag table has {len(table)} entries but the graph has {graph.node_count} nodes."
        )
    degrees = graph.degrees().tolist()
    return heapq.nsmallest(
        k,
        ((d, tag) for d, tag in zip(degrees, table.tags)),
        key=lambda entry: (-entry[0], entry[1]),
    )
