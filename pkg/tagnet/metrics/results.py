from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
import pandas as pd


@dataclass
class DegreeDistribution:
    """Histogram of node degrees.

    ``degrees`` holds every observed degree in increasing order (0 included when
    the graph has isolated nodes) and ``counts`` the number of nodes with it.
    """

    degrees: np.ndarray
    counts: np.ndarray
    node_count: int

    @property
    def probabilities(self) -> np.ndarray:
        return self.counts / self.node_count

    @property
    def ccdf(self) -> np.ndarray:
        """P(K >= k) for every observed k."""
        tail_counts = np.cumsum(self.counts[::-1])[::-1]
        return tail_counts / self.node_count

    def probability(self, k: int) -> float:
        match = np.flatnonzero(self.degrees == k)
        return float(self.probabilities[match[0]]) if match.size else 0.0

    def ccdf_at(self, k: int) -> float:
        return float(self.counts[self.degrees >= k].sum() / self.node_count)

    def conditional_ccdf(self, k_min: int) -> Tuple[np.ndarray, np.ndarray]:
        """P(K >= k | K >= k_min) for every observed k >= k_min."""
        mask = self.degrees >= k_min
        counts = self.counts[mask]
        tail_counts = np.cumsum(counts[::-1])[::-1]
        total = tail_counts[0] if tail_counts.size else 1
        return self.degrees[mask], tail_counts / total

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "k": self.degrees.astype(np.int64),
                "count": self.counts.astype(np.int64),
                "P(k)": self.probabilities,
                "CCDF(k)": self.ccdf,
            }
        )


@dataclass
class PowerLawFit:
    """Straight line fitted to degree data on log10-log10 axes.

    For ``target="pdf"`` the points are (k, P(k)) and ``gamma = -slope``. For
    ``target="ccdf"`` the points are (k, P(K >= k)) and ``gamma = 1 - slope``, the
    exponent a pure power law P(k) ~ k^-gamma would have.
    """

    gamma: float
    r: float
    k_min: int
    points_used: int
    slope: float
    intercept: float
    flat: bool = False
    target: str = "pdf"


@dataclass
class ClusteringResult:
    """Per-node clustering coefficients and their average.

    ``local[i]`` is NaN where ``C_i`` is undefined (degree below 2).
    """

    local: np.ndarray
    average: float
    undefined_count: int
    zero_for_low_degree: bool = False


@dataclass
class PathLengthResult:
    """Average shortest-path length over connected pairs.

    ``pairs_counted`` is the number of distinct unordered node pairs whose distance
    entered the mean.
    """

    value: float
    pairs_counted: int
    mode: str = "exact"
    sources: Optional[int] = None
    seed: Optional[int] = None
    standard_error: Optional[float] = None
    lcc_only: bool = False
    diameter: Optional[int] = None


@dataclass
class ErBaseline:
    """Erdős–Rényi expectations for a random graph with the same N and <k>."""

    l_random: float
    c_random: float


@dataclass(frozen=True)
class VerdictThresholds:
    max_l_ratio: float = 2.0
    min_c_ratio: float = 10.0
    min_abs_r: float = 0.9


@dataclass(frozen=True)
class SmallWorldVerdict:
    small_world: bool
    l_ratio: float
    c_ratio: float


@dataclass(frozen=True)
class ScaleFreeVerdict:
    scale_free: bool
    gamma: float
    abs_r: float


@dataclass
class Verdict:
    """Both verdicts with the thresholds they were decided against."""

    small_world: Optional[SmallWorldVerdict]
    scale_free: Optional[ScaleFreeVerdict]
    thresholds: VerdictThresholds = field(default_factory=VerdictThresholds)


@dataclass
class NetworkSummary:
    """Everything known about a tag network.

    The measured statistics are filled by ``network_summary``; the distribution,
    fits, baseline, verdict and top tags are added by the diagnostics. A field is
    ``None`` when the graph is too degenerate to define it.
    """

    n: int
    m: int
    avg_degree: Optional[float]
    clustering: Optional[float] = None
    path_length: Optional[PathLengthResult] = None
    isolated_nodes: int = 0
    component_count: int = 0
    largest_component: int = 0
    clustering_result: Optional[ClusteringResult] = None
    distribution: Optional[DegreeDistribution] = None
    fit: Optional[PowerLawFit] = None
    ccdf_fit: Optional[PowerLawFit] = None
    baseline: Optional[ErBaseline] = None
    verdict: Optional[Verdict] = None
    top_tags: List[Tuple[int, str]] = field(default_factory=list)

    @property
    def l(self) -> Optional[float]:
        return None if self.path_length is None else self.path_length.value
