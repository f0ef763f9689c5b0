import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Tuple

from .ingest import NormalizationPolicy
from .ingest.readers import SUPPORTED_FORMATS_TO_READERS, infer_format
from .metrics import VerdictThresholds
from .metrics.path_measures import APL_MODES

OUTPUT_DIR_ENV = "TAGNET_OUTPUT_DIR"
DEFAULT_OUTPUT_DIR = "tagnet-output"
INPUT_FORMATS = tuple(SUPPORTED_FORMATS_TO_READERS) + ("graph",)


def default_output_dir() -> Path:
    return Path(os.environ.get(OUTPUT_DIR_ENV) or DEFAULT_OUTPUT_DIR)


@dataclass(frozen=True)
class AnalysisConfig:
    """Everything a ``build`` or ``analyze`` run depends on.

    ``input_format`` may be left ``None`` to infer it from the file extensions;
    all inputs of a run must then share one format.
    """

    inputs: Tuple[Path, ...] = ()
    input_format: Optional[str] = None
    policy: NormalizationPolicy = field(default_factory=NormalizationPolicy)
    apl_mode: str = "auto"
    apl_sources: int = 1000
    lcc_only: bool = False
    clustering_zero_for_low_degree: bool = False
    k_min: int = 1
    max_l_ratio: float = 2.0
    min_c_ratio: float = 10.0
    min_abs_r: float = 0.9
    top_k: int = 20
    output_dir: Path = field(default_factory=default_output_dir)
    seed: int = 0
    threads: int = 1
    clique_warning_threshold: int = 1000
    exact_apl_max_nodes: int = 20000

    @property
    def thresholds(self) -> VerdictThresholds:
        return VerdictThresholds(
            max_l_ratio=self.max_l_ratio,
            min_c_ratio=self.min_c_ratio,
            min_abs_r=self.min_abs_r,
        )

    def resolved_format(self) -> str:
        """The single input format of this run."""
        if self.input_format is not None:
            return self.input_format
        formats = sorted({infer_format(path) for path in self.inputs})
        if len(formats) != 1:
            raise ValueError(
                f"Inputs mix formats {', '.join(formats)}; pass --format to pick one."
            )
        return formats[0]

    def validate(self):
        if not self.inputs:
            raise ValueError("At least one input path is required.")
        if self.input_format is not None and self.input_format not in INPUT_FORMATS:
            raise ValueError(
                f"Input format {self.input_format} is not supported. "
                f"Specify one among: {', '.join(INPUT_FORMATS)}."
            )
        input_format = self.resolved_format()
        if input_format == "graph" and len(self.inputs) != 1:
            raise ValueError("A graph snapshot must be analysed on its own.")
        if self.apl_mode not in APL_MODES:
            raise ValueError(
                f"Unknown path length mode {self.apl_mode}. "
                f"Specify one among: {', '.join(APL_MODES)}."
            )
        for name in ("apl_sources", "top_k", "threads", "exact_apl_max_nodes"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1, got {getattr(self, name)}.")
        if self.k_min < 0:
            raise ValueError(f"k_min must be non-negative, got {self.k_min}.")
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}.")
        if self.clique_warning_threshold < 2:
            raise ValueError("clique_warning_threshold must be at least 2.")
        return self
