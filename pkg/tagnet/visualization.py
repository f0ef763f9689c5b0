from pathlib import Path
from typing import Dict, Mapping, Optional, Union

import numpy as np
import pandas as pd

from .metrics import DegreeDistribution, PowerLawFit
from .reporting import round_significant

PLOT_SCRIPT_TEMPLATE = '''"""Log-log degree distribution and CCDF of a tag network."""

import matplotlib.pyplot as plt
import pandas as pd

DEGREE_TSV = {degree_tsv!r}
CCDF_TSV = {ccdf_tsv!r}
PDF_FIT = {pdf_fit!r}
CCDF_FIT = {ccdf_fit!r}


def fitted_line(ax, k, fit, exponent):
    if fit is None:
        return
    k = k[k >= fit["k_min"]]
    ax.plot(k, 10 ** fit["intercept"] * k ** exponent, color="black",
            label="gamma = {{:.3f}}, R = {{:.3f}}".format(fit["gamma"], fit["r"]))


degree = pd.read_csv(DEGREE_TSV, sep="\\t")
degree = degree[degree["k"] > 0]
ccdf = pd.read_csv(CCDF_TSV, sep="\\t")
ccdf = ccdf[ccdf["k"] > 0]
if CCDF_FIT:
    # the CCDF fit is conditioned on K >= k_min, and so is the scatter
    ccdf = ccdf[ccdf["k"] >= CCDF_FIT["k_min"]].copy()
    ccdf["CCDF(k)"] /= ccdf["CCDF(k)"].iloc[0]

fig, (left, right) = plt.subplots(1, 2, figsize=(10, 4))
left.scatter(degree["k"], degree["P(k)"], s=8)
fitted_line(left, degree["k"].to_numpy(dtype=float), PDF_FIT,
            -PDF_FIT["gamma"] if PDF_FIT else 0)
left.set(xscale="log", yscale="log", xlabel="k", ylabel="P(k)", title="Degree distribution")

right.scatter(ccdf["k"], ccdf["CCDF(k)"], s=8)
fitted_line(right, ccdf["k"].to_numpy(dtype=float), CCDF_FIT,
            1 - CCDF_FIT["gamma"] if CCDF_FIT else 0)
right.set(xscale="log", yscale="log", xlabel="k", ylabel="P(K >= k)", title="Degree CCDF")

for ax in (left, right):
    if ax.get_legend_handles_labels()[0]:
        ax.legend()
fig.tight_layout()
fig.savefig({image!r}, dpi=150)
'''


def _fit_parameters(fit: Optional[PowerLawFit]) -> Optional[Dict]:
    if fit is None:
        return None
    return {
        "gamma": round_significant(fit.gamma),
        "r": round_significant(fit.r),
        "k_min": fit.k_min,
        "intercept": round_significant(fit.intercept),
    }


def render_plot_script(
    degree_tsv: str,
    ccdf_tsv: str,
    fit: Optional[PowerLawFit] = None,
    ccdf_fit: Optional[PowerLawFit] = None,
    image: str = "degree_distribution.png",
) -> str:
    """Source of a standalone matplotlib script drawing P(k) and the CCDF on log-log axes.

    Data is read from the two TSV files (paths relative to the script's working
    directory); fitted lines and their correlation coefficient go in the legends.
    """
    return PLOT_SCRIPT_TEMPLATE.format(
        degree_tsv=degree_tsv,
        ccdf_tsv=ccdf_tsv,
        pdf_fit=_fit_parameters(fit),
        ccdf_fit=_fit_parameters(ccdf_fit),
        image=image,
    )


def write_plot_script(path: Union[str, Path], **kwargs):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(render_plot_script(**kwargs))


def plot_degree_distribution(
    dist: DegreeDistribution,
    fit: Optional[PowerLawFit] = None,
    ccdf_fit: Optional[PowerLawFit] = None,
    path: Optional[Union[str, Path]] = None,
):
    """Draw P(k) and the CCDF on log-log axes.

    With a CCDF fit the right panel shows P(K >= k | K >= k_min), the series
    the fit was made on.

    Requires the ``plot`` extra (matplotlib and seaborn).

    Returns:
        matplotlib.figure.Figure: the figure, also saved to ``path`` when given
    """
    import matplotlib.pyplot as plt
    import seaborn as sns

    frame = dist.to_frame()
    frame = frame[frame["k"] > 0]
    k = frame["k"].to_numpy(dtype=float)

    fig, (left, right) = plt.subplots(1, 2, figsize=(10, 4))
    sns.scatterplot(data=frame, x="k", y="P(k)", ax=left, s=12, linewidth=0)
    if ccdf_fit is None:
        tail = frame[["k", "CCDF(k)"]]
    else:
        tail_k, conditional = dist.conditional_ccdf(max(ccdf_fit.k_min, 1))
        tail = pd.DataFrame({"k": tail_k, "CCDF(k)": conditional})
    sns.scatterplot(data=tail, x="k", y="CCDF(k)", ax=right, s=12, linewidth=0)
    for ax, line, exponent in (
        (left, fit, None if fit is None else -fit.gamma),
        (right, ccdf_fit, None if ccdf_fit is None else 1 - ccdf_fit.gamma),
    ):
        if line is not None:
            ks = k[k >= line.k_min]
            ax.plot(
                ks,
                10**line.intercept * np.power(ks, exponent),
                color="black",
                label=f"gamma = {line.gamma:.3f}, R = {line.r:.3f}",
            )
            ax.legend()
        ax.set(xscale="log", yscale="log")
    left.set(title="Degree distribution")
    right.set(ylabel="P(K >= k)", title="Degree CCDF")
    fig.tight_layout()
    if path is not None:
        fig.savefig(path, dpi=150)
    return fig


def statistics_table(document: Mapping) -> pd.DataFrame:
    """Headline statistics of a summary document as a two-column table."""
    path_length = document.get("path_length") or {}
    baseline = document.get("baseline") or {}
    fit = document.get("fit") or {}
    rows = [
        ("Nodes N", document.get("n")),
        ("Edges M", document.get("m")),
        ("Average degree <k>", document.get("avg_degree")),
        ("Clustering coefficient C", document.get("clustering")),
        ("Average path length l", path_length.get("value")),
        ("Random path length l_random", baseline.get("l_random")),
        ("Random clustering C_random", baseline.get("c_random")),
        ("Power-law exponent gamma", fit.get("gamma")),
        ("Correlation coefficient R", fit.get("r")),
        ("Isolated nodes", document.get("isolated_nodes")),
    ]
    return pd.DataFrame(rows, columns=["Statistic", "Value"]).set_index("Statistic")


def verdict_table(document: Mapping) -> pd.DataFrame:
    verdict = document.get("verdict") or {}
    ratios = verdict.get("ratios") or {}
    thresholds = verdict.get("thresholds") or {}
    rows = [
        (
            "small world",
            verdict.get("small_world"),
            f"l/l_random = {ratios.get('l_ratio')} (<= {thresholds.get('max_l_ratio')}), "
            f"C/C_random = {ratios.get('c_ratio')} (>= {thresholds.get('min_c_ratio')})",
        ),
        (
            "scale free",
            verdict.get("scale_free"),
            f"gamma = {ratios.get('gamma')} (> 0), "
            f"|R| = {ratios.get('abs_r')} (>= {thresholds.get('min_abs_r')})",
        ),
    ]
    return pd.DataFrame(rows, columns=["Property", "Verdict", "Evidence"]).set_index(
        "Property"
    )


def top_tags_table(document: Mapping) -> pd.DataFrame:
    rows = document.get("top_tags") or []
    table = pd.DataFrame(rows, columns=["Degree", "Tag"])[["Tag", "Degree"]]
    table.index = pd.RangeIndex(1, len(table) + 1, name="Rank")
    return table


def format_report(document: Mapping) -> str:
    """Plain-text report of a summary document."""
    sections = [
        "Network statistics",
        statistics_table(document).to_string(),
        "",
        "Verdicts",
        verdict_table(document).to_string(),
        "",
        f"Top {len(document.get('top_tags') or [])} degree tags",
        top_tags_table(document).to_string(),
    ]
    return "\n".join(sections) + "\n"
