"""Machine-readable outputs: summary JSON, degree and CCDF tables, build log, items."""

import json
from pathlib import Path
from typing import Dict, Iterable, Mapping, Optional, Union

from .metrics import DegreeDistribution, NetworkSummary, PowerLawFit

SIGNIFICANT_DIGITS = 6
FLOAT_FORMAT = f"%.{SIGNIFICANT_DIGITS}g"


def round_significant(value: Optional[float]) -> Optional[float]:
    """Round to 6 significant digits; ``None`` passes through."""
    if value is None:
        return None
    return float(f"{value:.{SIGNIFICANT_DIGITS}g}")


def _fit_to_dict(fit: Optional[PowerLawFit]) -> Optional[Dict]:
    if fit is None:
        return None
    return {
        "gamma": round_significant(fit.gamma),
        "r": round_significant(fit.r),
        "k_min": fit.k_min,
        "points_used": fit.points_used,
        "flat": fit.flat,
    }


def _path_length_to_dict(summary: NetworkSummary) -> Optional[Dict]:
    result = summary.path_length
    if result is None:
        return None
    out = {
        "value": round_significant(result.value),
        "mode": result.mode,
        "pairs": result.pairs_counted,
    }
    if result.mode == "sampled":
        out["sources"] = result.sources
        out["seed"] = result.seed
        out["standard_error"] = round_significant(result.standard_error)
    out["lcc_only"] = result.lcc_only
    out["diameter"] = result.diameter
    return out


def _verdict_to_dict(summary: NetworkSummary) -> Optional[Dict]:
    verdict = summary.verdict
    if verdict is None:
        return None
    small_world, scale_free = verdict.small_world, verdict.scale_free
    return {
        "small_world": None if small_world is None else small_world.small_world,
        "scale_free": None if scale_free is None else scale_free.scale_free,
        "ratios": {
            "l_ratio": None if small_world is None else round_significant(small_world.l_ratio),
            "c_ratio": None if small_world is None else round_significant(small_world.c_ratio),
            "gamma": None if scale_free is None else round_significant(scale_free.gamma),
            "abs_r": None if scale_free is None else round_significant(scale_free.abs_r),
        },
        "thresholds": {
            "max_l_ratio": verdict.thresholds.max_l_ratio,
            "min_c_ratio": verdict.thresholds.min_c_ratio,
            "min_abs_r": verdict.thresholds.min_abs_r,
        },
    }


def summary_to_dict(summary: NetworkSummary) -> Dict:
    """The summary document, keys in their fixed order, floats at 6 significant digits."""
    baseline = summary.baseline
    return {
        "n": summary.n,
        "m": summary.m,
        "avg_degree": round_significant(summary.avg_degree),
        "clustering": round_significant(summary.clustering),
        "path_length": _path_length_to_dict(summary),
        "baseline": None
        if baseline is None
        else {
            "l_random": round_significant(baseline.l_random),
            "c_random": round_significant(baseline.c_random),
        },
        "fit": _fit_to_dict(summary.fit),
        "verdict": _verdict_to_dict(summary),
        "top_tags": [[degree, tag] for degree, tag in summary.top_tags],
        "isolated_nodes": summary.isolated_nodes,
        "ccdf_fit": _fit_to_dict(summary.ccdf_fit),
        "components": {
            "count": summary.component_count,
            "largest": summary.largest_component,
        },
    }


def _write_text(path: Union[str, Path], text: str):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def dumps_json(document: Mapping) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def write_summary_json(path: Union[str, Path], summary: NetworkSummary):
    _write_text(path, dumps_json(summary_to_dict(summary)))


def read_summary_json(path: Union[str, Path]) -> Dict:
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def write_degree_tsv(path: Union[str, Path], dist: DegreeDistribution):
    """``k<TAB>count<TAB>P(k)<TAB>CCDF(k)`` sorted by k."""
    dist.to_frame().to_csv(
        path,
        sep="\t",
        index=False,
        float_format=FLOAT_FORMAT,
        lineterminator="\n",
        encoding="utf-8",
    )


def write_ccdf_tsv(path: Union[str, Path], dist: DegreeDistribution):
    """``k<TAB>CCDF(k)`` sorted by k."""
    dist.to_frame()[["k", "CCDF(k)"]].to_csv(
        path,
        sep="\t",
        index=False,
        float_format=FLOAT_FORMAT,
        lineterminator="\n",
        encoding="utf-8",
    )


def write_build_log(path: Union[str, Path], log: Mapping):
    _write_text(path, dumps_json(log))


def write_items_jsonl(path: Union[str, Path], items: Mapping[str, Iterable[str]]):
    """One ``{"url": ..., "tags": [...]}`` object per item, URLs and tags sorted."""
    lines = (
        json.dumps({"url": url, "tags": sorted(items[url])}, ensure_ascii=False) + "\n"
        for url in sorted(items)
    )
    _write_text(path, "".join(lines))
