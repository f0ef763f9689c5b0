import numpy as np
from scipy.stats import linregress

from ..errors import EmptyGraphError, FitDegenerateError
from ..graph import TagGraph
from .results import DegreeDistribution, PowerLawFit

MIN_FIT_POINTS = 3
FIT_TARGETS = ("pdf", "ccdf")


def degree_distribution(graph: TagGraph) -> DegreeDistribution:
    """Exact degree histogram over all nodes, isolated ones included at k=0."""
    if graph.node_count == 0:
        raise EmptyGraphError("The degree distribution of an empty graph is undefined.")
    degrees, counts = np.unique(graph.degrees(), return_counts=True)
    return DegreeDistribution(
        degrees=degrees.astype(np.int64),
        counts=counts.astype(np.int64),
        node_count=graph.node_count,
    )


def fit_power_law(dist: DegreeDistribution, k_min: int = 1, target: str = "pdf") -> PowerLawFit:
    """Least-squares line through the degree data on log10 axes.

    Only observed degrees ``k >= max(k_min, 1)`` are used, so isolated nodes never
    enter the fit. The points are unbinned.

    Args:
        dist (DegreeDistribution): the degree histogram
        k_min (int): smallest degree to include. Defaults to 1.
        target (str): ``"pdf"`` fits P(k), ``"ccdf"`` fits P(K >= k | K >= k_min).

    Returns:
        PowerLawFit: exponent, Pearson correlation of the log-log points and the line.
        When all points share the same ordinate the fit is flagged ``flat`` with
        ``gamma = 0`` and ``r = 0``.
    """
    if target not in FIT_TARGETS:
        raise ValueError(f"Unknown fit target {target}. Specify one among: pdf, ccdf.")
    lower = max(int(k_min), 1)

    if target == "pdf":
        mask = (dist.degrees >= lower) & (dist.counts > 0)
        x, y = dist.degrees[mask], dist.probabilities[mask]
    else:
        x, y = dist.conditional_ccdf(lower)

    if x.size < MIN_FIT_POINTS:
        raise FitDegenerateError(
            f"A power-law fit needs at least {MIN_FIT_POINTS} distinct degrees >= {lower}, "
            f"found {x.size}."
        )

    log_k, log_p = np.log10(x.astype(np.float64)), np.log10(y)
    flat = bool(np.ptp(log_p) == 0)
    if flat:
        slope, intercept, r = 0.0, float(log_p[0]), 0.0
    else:
        regression = linregress(log_k, log_p)
        slope, intercept, r = (
            float(regression.slope),
            float(regression.intercept),
            float(regression.rvalue),
        )

    gamma = -slope if target == "pdf" else 1.0 - slope
    return PowerLawFit(
        gamma=gamma + 0.0,
        r=r,
        k_min=lower,
        points_used=int(x.size),
        slope=slope,
        intercept=intercept,
        flat=flat,
        target=target,
    )
