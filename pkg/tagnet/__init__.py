"""Top-level package for tagnet."""

__author__ = """tagnet developers"""
__version__ = "0.1.0"

from logging import getLogger

logger = getLogger(__name__)

from .analysis import NetworkAnalysis

# Diagnostics
from .diagnostics import (
    er_baseline,
    scale_free_verdict,
    small_world_verdict,
    top_k_degree,
)

# Graph
from .graph import (
    TagGraph,
    TagTable,
    build_cooccurrence_graph,
    connected_components,
    load_snapshot,
    save_snapshot,
)

# Ingestion
from .ingest import BaseRecordReader, NormalizationPolicy, PostRecord
from .ingest.normalization import ItemTagSets, aggregate_by_url, normalize_tags
from .ingest.readers import (
    CsvReader,
    DeliciousRssReader,
    JsonLinesReader,
    create_reader,
    parse_csv_row,
    parse_jsonl_record,
    read_records,
)

# Measures
from .metrics import (
    PathLengthMode,
    average_clustering,
    average_path_length,
    degree_distribution,
    fit_power_law,
    local_clustering,
    network_summary,
)

# Synthetic graphs
from .synth import BaseGenerator, GeneratorSpec
from .synth.generators import (
    BarabasiAlbertGenerator,
    ErdosRenyiGenerator,
    WattsStrogatzGenerator,
    generate_ba,
    generate_er,
    generate_ws,
    graph_to_items,
)
