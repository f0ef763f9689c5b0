"""Plain-text graph snapshots.

Layout::

    tagnet-graph v1 N M [key=value ...]
    i j            (M lines, i < j, sorted)
    id<TAB>tag     (N lines, ids 0..N-1)

Tabs, newlines and backslashes inside tags are escaped as ``\\t``, ``\\n``, ``\\r``
and ``\\\\``. Loading and saving again reproduces the file byte for byte.
"""

from pathlib import Path
from typing import Dict, Optional, Tuple, Union

import numpy as np

from ..errors import GraphInvariantError, SnapshotFormatError
from .tag_graph import TagGraph, TagTable

MAGIC = "tagnet-graph"
VERSION = "v1"

_ESCAPES = {"\\": "\\\\", "\t": "\\t", "\n": "\\n", "\r": "\\r"}
_UNESCAPES = {"\\": "\\", "t": "\t", "n": "\n", "r": "\r"}


def _escape(tag: str) -> str:
    return "".join(_ESCAPES.get(c, c) for c in tag)


def _unescape(text: str, line_number: int) -> str:
    out = list()
    chars = iter(text)
    for c in chars:
        if c != "\\":
            out.append(c)
            continue
        code = next(chars, None)
        if code not in _UNESCAPES:
            raise SnapshotFormatError(f"line {line_number}: bad escape in tag {text!r}")
        out.append(_UNESCAPES[code])
    return "".join(out)


def format_header(graph: TagGraph, metadata: Optional[Dict[str, object]] = None) -> str:
    tokens = [MAGIC, VERSION, str(graph.node_count), str(graph.edge_count)]
    for key, value in (metadata or {}).items():
        value = str(value)
        if not key or any(c.isspace() or c == "=" for c in key) or any(
            c.isspace() for c in value
        ):
            raise ValueError(f"Metadata {key}={value} cannot contain whitespace.")
        tokens.append(f"{key}={value}")
    return " ".join(tokens)


def save_snapshot(
    path: Union[str, Path],
    table: TagTable,
    graph: TagGraph,
    metadata: Optional[Dict[str, object]] = None,
):
    """Write a graph and its tag table.

    Args:
        path (Union[str, Path]): destination file
        table (TagTable): node labels, one per node
        graph (TagGraph): the graph
        metadata (Dict[str, object], optional): extra ``key=value`` header tokens,
            written in the given order
    """
    if len(table) != graph.node_count:
        raise ValueError(
            f"Tag table has {len(table)} entries but the graph has {graph.node_count} nodes."
        )
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(format_header(graph, metadata) + "\n")
        f.writelines(f"{i} {j}\n" for i, j in graph.edges().tolist())
        f.writelines(f"{node}\t{_escape(tag)}\n" for node, tag in enumerate(table))


def _parse_header(line: str) -> Tuple[int, int, Dict[str, str]]:
    tokens = line.split()
    if len(tokens) < 4 or tokens[0] != MAGIC:
        raise SnapshotFormatError(f"line 1: not a {MAGIC} file")
    if tokens[1] != VERSION:
        raise SnapshotFormatError(f"line 1: unsupported snapshot version {tokens[1]}")
    try:
        n, m = int(tokens[2]), int(tokens[3])
    except ValueError:
        raise SnapshotFormatError("line 1: N and M must be integers")
    if n < 0 or m < 0:
        raise SnapshotFormatError("line 1: N and M must be non-negative")

    metadata = dict()
    for token in tokens[4:]:
        key, sep, value = token.partition("=")
        if not sep:
            raise SnapshotFormatError(f"line 1: metadata token {token!r} is not key=value")
        metadata[key] = value
    return n, m, metadata


def load_snapshot(path: Union[str, Path]) -> Tuple[TagTable, TagGraph, Dict[str, str]]:
    """Read a snapshot written by :func:`save_snapshot`.

    Returns:
        Tuple[TagTable, TagGraph, Dict[str, str]]: tag table, graph and header metadata
    """
    with open(path, encoding="utf-8", newline="") as f:
        lines = f.read().split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise SnapshotFormatError(f"{path}: empty snapshot")

    n, m, metadata = _parse_header(lines[0])
    if len(lines) != 1 + m + n:
        raise SnapshotFormatError(
            f"{path}: expected {1 + m + n} lines for N={n}, M={m}, found {len(lines)}"
        )

    edges = np.empty((m, 2), dtype=np.int64)
    for row, line_number in enumerate(range(2, 2 + m)):
        parts = lines[line_number - 1].split(" ")
        try:
            i, j = int(parts[0]), int(parts[1])
        except (ValueError, IndexError):
            raise SnapshotFormatError(f"{path}:{line_number}: expected an edge 'i j'")
        if len(parts) != 2 or not 0 <= i < j < n:
            raise SnapshotFormatError(
                f"{path}:{line_number}: edge must satisfy 0 <= i < j < N"
            )
        edges[row] = (i, j)

    table = TagTable()
    for node, line_number in enumerate(range(2 + m, 2 + m + n)):
        node_id, sep, tag = lines[line_number - 1].partition("\t")
        if not sep or node_id != str(node):
            raise SnapshotFormatError(f"{path}:{line_number}: expected '{node}<TAB>tag'")
        tag = _unescape(tag, line_number)
        if tag in table:
            raise SnapshotFormatError(f"{path}:{line_number}: duplicate tag {tag!r}")
        table.intern(tag)

    try:
        graph = TagGraph.from_edges(n, edges)
    except GraphInvariantError as e:
        raise SnapshotFormatError(f"{path}: {e}")
    if graph.edge_count != m:
        raise SnapshotFormatError(f"{path}: duplicate edges, header declares M={m}")
    return table, graph, metadata
