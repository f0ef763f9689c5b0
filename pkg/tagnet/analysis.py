"""Client Interface Module"""

import logging
import warnings
from typing import Optional

from .diagnostics import (
    er_baseline,
    scale_free_verdict,
    small_world_verdict,
    top_k_degree,
)
from .errors import BaselineUndefinedError, EmptyGraphError, FitDegenerateError
from .graph import TagGraph, TagTable
from .metrics import (
    NetworkSummary,
    Verdict,
    VerdictThresholds,
    degree_distribution,
    fit_power_law,
    network_summary,
    resolve_apl_mode,
)
from .metrics.path_measures import DEFAULT_EXACT_MAX_NODES, DEFAULT_SAMPLED_SOURCES

logger = logging.getLogger(__name__)


class NetworkAnalysis:
    """Run every measure and diagnostic on a tag network.

    Args:
        k_min (int): smallest degree entering the power-law fits
        thresholds (VerdictThresholds, optional): cutoffs of both verdicts
        apl_mode (str): ``auto``, ``exact`` or ``sampled``
        apl_sources (int): BFS sources in sampled mode
        seed (int): seed of the sampled mode source draw
        exact_max_nodes (int): largest N for which ``auto`` stays exact
        lcc_only (bool): average path lengths over the largest component only
        zero_for_low_degree (bool): count nodes with k < 2 as C_i = 0
        top_k (int): size of the top degree table
        n_jobs (int): workers for the path length computation
        show_progress (bool): enable progress bars
    """

    def __init__(
        self,
        k_min: int = 1,
        thresholds: Optional[VerdictThresholds] = None,
        apl_mode: str = "auto",
        apl_sources: int = DEFAULT_SAMPLED_SOURCES,
        seed: int = 0,
        exact_max_nodes: int = DEFAULT_EXACT_MAX_NODES,
        lcc_only: bool = False,
        zero_for_low_degree: bool = False,
        top_k: int = 20,
        n_jobs: int = 1,
        show_progress: bool = False,
    ):
        self.k_min = k_min
        self.thresholds = thresholds or VerdictThresholds()
        self.apl_mode = apl_mode
        self.apl_sources = apl_sources
        self.seed = seed
        self.exact_max_nodes = exact_max_nodes
        self.lcc_only = lcc_only
        self.zero_for_low_degree = zero_for_low_degree
        self.top_k = top_k
        self.n_jobs = n_jobs
        self.show_progress = show_progress

    @classmethod
    def from_config(cls, config, show_progress: bool = False) -> "NetworkAnalysis":
        return cls(
            k_min=config.k_min,
            thresholds=config.thresholds,
            apl_mode=config.apl_mode,
            apl_sources=config.apl_sources,
            seed=config.seed,
            exact_max_nodes=config.exact_apl_max_nodes,
            lcc_only=config.lcc_only,
            zero_for_low_degree=config.clustering_zero_for_low_degree,
            top_k=config.top_k,
            n_jobs=config.threads,
            show_progress=show_progress,
        )

    def analyze(
        self, graph: TagGraph, table: Optional[TagTable] = None, strict: bool = False
    ) -> NetworkSummary:
        """Measure the graph and decide both verdicts.

        Args:
            graph (TagGraph): the graph
            table (TagTable, optional): tag labels; synthetic ``n<i>`` labels if omitted
            strict (bool): raise on degenerate graphs. When False every undefined
                quantity is left ``None`` with a warning.

        Returns:
            NetworkSummary: statistics, fits, baseline, verdicts and top tags
        """
        table = table if table is not None else TagTable.synthetic(graph.node_count)
        mode = resolve_apl_mode(
            graph.node_count,
            self.apl_mode,
            sources=self.apl_sources,
            seed=self.seed,
            exact_max_nodes=self.exact_max_nodes,
        )
        summary = network_summary(
            graph,
            apl_mode=mode,
            lcc_only=self.lcc_only,
            zero_for_low_degree=self.zero_for_low_degree,
            n_jobs=self.n_jobs,
            strict=strict,
            show_progress=self.show_progress,
        )

        try:
            summary.distribution = degree_distribution(graph)
        except EmptyGraphError as e:
            if strict:
                raise
            warnings.warn(f"Degree distribution left undefined: {e}")

        if summary.distribution is not None:
            try:
                summary.fit = fit_power_law(summary.distribution, self.k_min, target="pdf")
                summary.ccdf_fit = fit_power_law(
                    summary.distribution, self.k_min, target="ccdf"
                )
            except FitDegenerateError as e:
                if strict:
                    raise
                warnings.warn(f"Power-law fit left undefined: {e}")

        if summary.avg_degree is not None:
            try:
                summary.baseline = er_baseline(summary.n, summary.avg_degree)
            except BaselineUndefinedError as e:
                if strict:
                    raise
                warnings.warn(f"Random baseline left undefined: {e}")

        summary.verdict = Verdict(
            small_world=(
                small_world_verdict(summary, summary.baseline, self.thresholds)
                if summary.baseline is not None
                and summary.l is not None
                and summary.clustering is not None
                else None
            ),
            scale_free=(
                scale_free_verdict(summary.fit, self.thresholds)
                if summary.fit is not None
                else None
            ),
            thresholds=self.thresholds,
        )
        if graph.node_count:
            summary.top_tags = top_k_degree(graph, table, self.top_k)

        logger.info(
            "Verdicts: small_world=%s, scale_free=%s",
            summary.verdict.small_world,
            summary.verdict.scale_free,
        )
        return summary

    def __call__(self, graph: TagGraph, table: Optional[TagTable] = None) -> NetworkSummary:
        return self.analyze(graph, table)
