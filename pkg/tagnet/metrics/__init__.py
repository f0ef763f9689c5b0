"""Metrics API"""

from .clustering_measures import (
    average_clustering,
    local_clustering,
    triangle_counts,
)
from .degree_measures import degree_distribution, fit_power_law
from .path_measures import PathLengthMode, average_path_length, resolve_apl_mode
from .results import (
    ClusteringResult,
    DegreeDistribution,
    ErBaseline,
    NetworkSummary,
    PathLengthResult,
    PowerLawFit,
    ScaleFreeVerdict,
    SmallWorldVerdict,
    Verdict,
    VerdictThresholds,
)
from .summary import network_summary
