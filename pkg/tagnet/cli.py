"""Command-line interface: ``tagnet build|analyze|synth|report``."""

import argparse
import logging
import sys
import warnings
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .analysis import NetworkAnalysis
from .config import INPUT_FORMATS, AnalysisConfig, default_output_dir
from .errors import (
    GeneratorSpecError,
    GraphInvariantError,
    RecordParseError,
    SnapshotFormatError,
)
from .graph import (
    BuildStats,
    TagGraph,
    TagTable,
    build_cooccurrence_graph,
    load_snapshot,
    save_snapshot,
)
from .ingest import IngestStats, NormalizationPolicy
from .ingest.normalization import ItemTagSets, aggregate_by_url
from .ingest.readers import read_records
from .metrics import DegreeDistribution
from .metrics.path_measures import APL_MODES
from .reporting import (
    read_summary_json,
    write_build_log,
    write_ccdf_tsv,
    write_degree_tsv,
    write_items_jsonl,
    write_summary_json,
)
from .synth import GeneratorSpec
from .synth.generators import generate, graph_to_items
from .visualization import format_report, write_plot_script

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_INVARIANT = 3

SNAPSHOT_FILE = "graph.snapshot"
BUILD_LOG_FILE = "build_log.json"
SUMMARY_FILE = "summary.json"
DEGREE_FILE = "degree.tsv"
CCDF_FILE = "ccdf.tsv"
PLOT_SCRIPT_FILE = "plot_degree.py"

SYNTH_PARAMETERS = {
    "er": (("p", float),),
    "ws": (("k_ring", int), ("beta", float)),
    "ba": (("m", int),),
}


class UsageError(ValueError):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class BuildResult:
    table: TagTable
    graph: TagGraph
    items: ItemTagSets
    ingest_stats: IngestStats = field(default_factory=IngestStats)
    build_stats: BuildStats = field(default_factory=BuildStats)
    warnings: List[str] = field(default_factory=list)

    def log(self) -> Dict:
        return {
            "records_read": self.ingest_stats.records_read,
            "distinct_urls": len(self.items),
            "distinct_tags": len(self.table),
            "n": self.graph.node_count,
            "m": self.graph.edge_count,
            "isolated_nodes": self.graph.isolated_count(),
            "skipped_items": self.ingest_stats.skipped_items,
            "largest_item": self.build_stats.largest_item,
            "oversized_items": self.build_stats.oversized_items,
            "warnings": list(self.warnings),
        }


def build_graph(config: AnalysisConfig) -> BuildResult:
    """Read the records of ``config.inputs`` and link the tags of every URL."""
    ingest_stats = IngestStats()
    records = read_records(config.inputs, config.resolved_format(), ingest_stats)
    items = aggregate_by_url(records, config.policy)
    build_stats = BuildStats()
    table, graph = build_cooccurrence_graph(
        items, config.clique_warning_threshold, build_stats
    )
    result = BuildResult(table, graph, items, ingest_stats, build_stats)
    result.warnings.extend(ingest_stats.warnings)

    if ingest_stats.records_read == 0:
        message = "No records were read; the graph is empty."
        warnings.warn(message)
        result.warnings.append(message)
    if build_stats.oversized_items:
        result.warnings.append(
            f"{build_stats.oversized_items} item(s) carry more than "
            f"{config.clique_warning_threshold} tags."
        )
    return result


def run_build(config: AnalysisConfig) -> Path:
    """Write the co-occurrence graph snapshot and its build log.

    Returns:
        Path: the snapshot file
    """
    config.validate()
    if config.resolved_format() == "graph":
        raise UsageError("build reads records; a graph snapshot can be analysed directly.")
    result = build_graph(config)

    config.output_dir.mkdir(parents=True, exist_ok=True)
    snapshot = config.output_dir / SNAPSHOT_FILE
    save_snapshot(snapshot, result.table, result.graph)
    write_build_log(config.output_dir / BUILD_LOG_FILE, result.log())
    logger.info("Wrote %s", snapshot)
    return snapshot


def load_graph(config: AnalysisConfig) -> Tuple[TagTable, TagGraph]:
    if config.resolved_format() == "graph":
        table, graph, _ = load_snapshot(config.inputs[0])
        return table, graph
    result = build_graph(config)
    return result.table, result.graph


def run_analyze(config: AnalysisConfig, show_progress: bool = False) -> Dict[str, Path]:
    """Analyse a snapshot or raw records and write the summary, tables and plot script.

    Degenerate graphs yield a summary with ``null`` fields and a warning.

    Returns:
        Dict[str, Path]: the written files by kind
    """
    config.validate()
    table, graph = load_graph(config)
    graph.validate()

    analysis = NetworkAnalysis.from_config(config, show_progress=show_progress)
    summary = analysis.analyze(graph, table, strict=False)
    dist = summary.distribution
    if dist is None:
        empty = np.empty(0, dtype=np.int64)
        dist = DegreeDistribution(degrees=empty, counts=empty, node_count=0)

    config.output_dir.mkdir(parents=True, exist_ok=True)
    outputs = {
        "summary": config.output_dir / SUMMARY_FILE,
        "degree": config.output_dir / DEGREE_FILE,
        "ccdf": config.output_dir / CCDF_FILE,
        "plot": config.output_dir / PLOT_SCRIPT_FILE,
    }
    write_summary_json(outputs["summary"], summary)
    write_degree_tsv(outputs["degree"], dist)
    write_ccdf_tsv(outputs["ccdf"], dist)
    write_plot_script(
        outputs["plot"],
        degree_tsv=DEGREE_FILE,
        ccdf_tsv=CCDF_FILE,
        fit=summary.fit,
        ccdf_fit=summary.ccdf_fit,
    )
    logger.info("Wrote %s", ", ".join(str(p) for p in outputs.values()))
    return outputs


def parse_generator_spec(model: str, n: int, parameters: Sequence[str], seed: int = 0):
    """``synth`` positional arguments to a validated GeneratorSpec."""
    expected = SYNTH_PARAMETERS.get(model, None)
    if expected is None:
        raise GeneratorSpecError(
            f"Model {model} is not supported. Specify one among: {', '.join(SYNTH_PARAMETERS)}."
        )
    if len(parameters) != len(expected):
        names = " ".join(name for name, _ in expected)
        raise GeneratorSpecError(f"synth {model} expects: n {names}")
    try:
        values = {name: cast(raw) for (name, cast), raw in zip(expected, parameters)}
    except ValueError as e:
        raise GeneratorSpecError(f"Invalid {model} parameter: {e}")
    spec = GeneratorSpec(model, n, seed, **values)
    spec.validate()
    return spec


def run_synth(
    spec: GeneratorSpec, output: Path, items_output: Optional[Path] = None
) -> Path:
    """Write the snapshot of a generated graph, and optionally its items as JSON lines."""
    graph = generate(spec)
    table = TagTable.synthetic(graph.node_count)
    output.parent.mkdir(parents=True, exist_ok=True)
    save_snapshot(output, table, graph, metadata=spec.metadata())
    if items_output is not None:
        items_output.parent.mkdir(parents=True, exist_ok=True)
        write_items_jsonl(items_output, graph_to_items(graph, table))
    return output


def run_report(summary_path: Path, output: Optional[Path] = None) -> str:
    report = format_report(read_summary_json(summary_path))
    if output is not None:
        with open(output, "w", encoding="utf-8", newline="\n") as f:
            f.write(report)
    return report


def _add_input_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("inputs", nargs="+", type=Path, help="input files")
    parser.add_argument(
        "--format",
        dest="input_format",
        choices=INPUT_FORMATS,
        help="input format, inferred from the file extension when omitted",
    )
    parser.add_argument("--no-case-fold", action="store_true", help="keep tag case")
    parser.add_argument(
        "--no-trim", action="store_true", help="keep surrounding whitespace of tags"
    )
    parser.add_argument("--keep-empty", action="store_true", help="keep empty tags")
    parser.add_argument(
        "--clique-warning-threshold",
        type=int,
        default=1000,
        help="warn about items with more tags than this",
    )
    parser.add_argument(
        "--output-dir",
        type=Path,
        help="output directory (default: $TAGNET_OUTPUT_DIR or ./tagnet-output)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="tagnet", description="Tag co-occurrence network diagnostics."
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="log progress")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="errors only")
    commands = parser.add_subparsers(dest="command", required=True)

    build = commands.add_parser("build", help="build a graph snapshot from records")
    _add_input_arguments(build)

    analyze = commands.add_parser("analyze", help="measure a graph and decide verdicts")
    _add_input_arguments(analyze)
    analyze.add_argument("--apl-mode", choices=APL_MODES, default="auto")
    analyze.add_argument(
        "--apl-sources", type=int, default=1000, help="BFS sources in sampled mode"
    )
    analyze.add_argument(
        "--lcc-only",
        action="store_true",
        help="average path lengths over the largest component only",
    )
    analyze.add_argument(
        "--clustering-zero-for-low-degree",
        action="store_true",
        help="count nodes with degree < 2 as C_i = 0",
    )
    analyze.add_argument("--k-min", type=int, default=1, help="smallest fitted degree")
    analyze.add_argument("--max-l-ratio", type=float, default=2.0)
    analyze.add_argument("--min-c-ratio", type=float, default=10.0)
    analyze.add_argument("--min-abs-r", type=float, default=0.9)
    analyze.add_argument("--top-k", type=int, default=20, help="size of the top tags table")
    analyze.add_argument("--seed", type=int, default=0, help="seed of sampled path lengths")
    analyze.add_argument("--threads", type=int, default=1, help="path length workers")
    analyze.add_argument(
        "--exact-apl-max-nodes",
        type=int,
        default=20000,
        help="largest N for which --apl-mode auto stays exact",
    )

    synth = commands.add_parser("synth", help="generate a seeded random graph")
    synth.add_argument("model", choices=tuple(SYNTH_PARAMETERS))
    synth.add_argument("n", type=int, help="number of nodes")
    synth.add_argument(
        "parameters", nargs="*", help="er: p | ws: k_ring beta | ba: m"
    )
    synth.add_argument("--seed", type=int, default=0)
    synth.add_argument("-o", "--output", type=Path, help="snapshot file to write")
    synth.add_argument(
        "--items", type=Path, help="also write the graph as tagged items (JSON lines)"
    )
    synth.add_argument("--output-dir", type=Path)

    report = commands.add_parser("report", help="print a summary as a text report")
    report.add_argument("summary", type=Path, help="summary.json written by analyze")
    report.add_argument("-o", "--output", type=Path, help="also write the report here")
    return parser


def config_from_args(args: argparse.Namespace) -> AnalysisConfig:
    values = {
        f.name: getattr(args, f.name)
        for f in fields(AnalysisConfig)
        if getattr(args, f.name, None) is not None
    }
    values["inputs"] = tuple(args.inputs)
    values["policy"] = NormalizationPolicy(
        case_fold=not args.no_case_fold,
        trim_whitespace=not args.no_trim,
        drop_empty=not args.keep_empty,
    )
    if args.output_dir is None:
        values["output_dir"] = default_output_dir()
    return AnalysisConfig(**values)


def _configure_logging(args: argparse.Namespace):
    level = logging.INFO if args.verbose else logging.WARNING
    if args.quiet:
        level = logging.ERROR
        warnings.simplefilter("ignore")
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "build":
        run_build(config_from_args(args))
    elif args.command == "analyze":
        show_progress = sys.stderr.isatty() and not args.quiet
        run_analyze(config_from_args(args), show_progress=show_progress)
    elif args.command == "synth":
        spec = parse_generator_spec(args.model, args.n, args.parameters, args.seed)
        output_dir = args.output_dir or default_output_dir()
        output = args.output or output_dir / f"{spec.model}.graph"
        run_synth(spec, output, args.items)
    elif args.command == "report":
        sys.stdout.write(run_report(args.summary, args.output))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return its exit code.

    0 on success (degenerate graphs included), 1 on usage errors, 2 when an input
    cannot be parsed or read, 3 when a graph invariant is violated.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"tagnet: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:
        return EXIT_OK if not e.code else EXIT_USAGE
    _configure_logging(args)

    try:
        return _dispatch(args)
    except GraphInvariantError as e:
        print(f"tagnet: invariant violated: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    except (RecordParseError, SnapshotFormatError, OSError, UnicodeDecodeError) as e:
        print(f"tagnet: error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as e:
        print(f"tagnet: error: {e}", file=sys.stderr)
        return EXIT_USAGE
