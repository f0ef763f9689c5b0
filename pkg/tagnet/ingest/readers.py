"""Record readers for JSON-lines, CSV and delicious-style RSS inputs."""

import csv
import io
import json
import logging
import warnings
import xml.sax
from calendar import timegm
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, TextIO, Union

import feedparser
from dateutil.parser import isoparse

from ..errors import RecordParseError
from . import BaseRecordReader, IngestStats, PostRecord

logger = logging.getLogger(__name__)

CSV_REQUIRED_COLUMNS = ("url", "tags")


def _parse_timestamp(value, line: Optional[int], source: str) -> Optional[datetime]:
    if value is None or value == "":
        return None
    if not isinstance(value, str):
        raise RecordParseError("`time` must be an ISO-8601 string", line, source)
    try:
        instant = isoparse(value.strip())
    except ValueError:
        raise RecordParseError(f"invalid ISO-8601 time {value!r}", line, source)
    # naive instants are taken as UTC
    if instant.tzinfo is None:
        return instant.replace(tzinfo=timezone.utc)
    return instant.astimezone(timezone.utc)


def parse_jsonl_record(
    line: str, line_number: Optional[int] = None, source: str = "<string>"
) -> PostRecord:
    """Parse one JSON-lines record.

    The object must carry a string ``url`` and an array of strings ``tags``; ``time``
    is an optional ISO-8601 string. Any other field (creator, title, ...) is ignored.

    Args:
        line (str): a single JSON object
        line_number (int, optional): 1-based line number used in error messages
        source (str): file name used in error messages

    Returns:
        PostRecord: the parsed record
    """
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as e:
        raise RecordParseError(f"malformed JSON ({e.msg})", line_number, source)

    if not isinstance(obj, dict):
        raise RecordParseError("expected a JSON object", line_number, source)

    url = obj.get("url")
    if not isinstance(url, str) or not url.strip():
        raise RecordParseError("missing url", line_number, source)

    tags = obj.get("tags")
    if not isinstance(tags, list):
        raise RecordParseError("`tags` must be an array", line_number, source)
    if not all(isinstance(t, str) for t in tags):
        raise RecordParseError("`tags` must contain only strings", line_number, source)

    timestamp = _parse_timestamp(obj.get("time"), line_number, source)
    return PostRecord(url=url, tags=list(tags), timestamp=timestamp)


def parse_csv_row(
    row: Dict[str, Optional[str]], line_number: Optional[int] = None, source: str = "<string>"
) -> PostRecord:
    """Parse one CSV row whose ``tags`` column is a space-separated list."""
    url = row.get("url")
    if url is None or not url.strip():
        raise RecordParseError("missing url", line_number, source)
    tags = (row.get("tags") or "").split()
    timestamp = _parse_timestamp(row.get("time"), line_number, source)
    return PostRecord(url=url, tags=tags, timestamp=timestamp)


def _entry_timestamp(entry) -> Optional[datetime]:
    parsed = entry.get("published_parsed") or entry.get("updated_parsed")
    if parsed is None:
        return None
    return datetime.fromtimestamp(timegm(parsed), tz=timezone.utc)


def _entry_tags(entry) -> List[str]:
    # delicious puts all tags in a single dc:subject, space separated
    terms = [t.get("term") or "" for t in entry.get("tags", [])]
    if not terms and entry.get("category"):
        terms = [entry.get("category")]
    return [tag for term in terms for tag in term.split()]


def parse_delicious_rss(
    document: str, source: str = "<string>", stats: Optional[IngestStats] = None
) -> List[PostRecord]:
    """Parse a delicious-style RSS document.

    Each item needs a ``link``; its ``subject`` (or category) text is split on runs
    of whitespace into tags. Items without a link are skipped and counted in
    ``stats.skipped_items``.

    Args:
        document (str): the XML document
        source (str): file name used in error messages
        stats (IngestStats, optional): collects skipped items and warnings

    Returns:
        List[PostRecord]: one record per item, in document order
    """
    # a byte stream keeps feedparser from treating the document as a URL or path
    feed = feedparser.parse(io.BytesIO(document.encode("utf-8")))
    if feed.get("bozo") and isinstance(feed.get("bozo_exception"), xml.sax.SAXException):
        raise RecordParseError(f"malformed XML ({feed.bozo_exception})", None, source)

    records = list()
    skipped = 0
    for entry in feed.entries:
        link = (entry.get("link") or "").strip()
        if not link:
            skipped += 1
            continue
        records.append(
            PostRecord(url=link, tags=_entry_tags(entry), timestamp=_entry_timestamp(entry))
        )

    if stats is not None:
        stats.records_read += len(records)
        stats.skipped_items += skipped
    if skipped:
        message = f"{source}: skipped {skipped} RSS item(s) without a link"
        if stats is not None:
            stats.warn(message)
        warnings.warn(message)
    return records


class JsonLinesReader(BaseRecordReader):
    NAME = "jsonl"

    def iter_records(self, stream: TextIO, source: str = "<string>") -> Iterator[PostRecord]:
        for line_number, line in enumerate(stream, start=1):
            if not line.strip():
                continue
            record = parse_jsonl_record(line, line_number, source)
            self.stats.records_read += 1
            yield record


class CsvReader(BaseRecordReader):
    NAME = "csv"

    def iter_records(self, stream: TextIO, source: str = "<string>") -> Iterator[PostRecord]:
        reader = csv.DictReader(stream)
        header = reader.fieldnames
        if header is None:
            # nothing to read, not even a header
            return
        missing = [c for c in CSV_REQUIRED_COLUMNS if c not in header]
        if missing:
            raise RecordParseError(f"header lacks column(s) {', '.join(missing)}", 1, source)

        for row in reader:
            record = parse_csv_row(row, reader.line_num, source)
            self.stats.records_read += 1
            yield record


class DeliciousRssReader(BaseRecordReader):
    NAME = "rss"

    def iter_records(self, stream: TextIO, source: str = "<string>") -> Iterator[PostRecord]:
        yield from parse_delicious_rss(stream.read(), source=source, stats=self.stats)


SUPPORTED_FORMATS_TO_READERS = {
    "jsonl": JsonLinesReader,
    "csv": CsvReader,
    "rss": DeliciousRssReader,
}

EXTENSIONS_TO_FORMATS = {
    ".jsonl": "jsonl",
    ".json": "jsonl",
    ".ndjson": "jsonl",
    ".csv": "csv",
    ".rss": "rss",
    ".xml": "rss",
    ".graph": "graph",
    ".snapshot": "graph",
}


def infer_format(path: Union[str, Path]) -> str:
    input_format = EXTENSIONS_TO_FORMATS.get(Path(path).suffix.lower(), None)
    if input_format is None:
        raise ValueError(
            f"Cannot infer the input format of {path}. Specify one among: "
            f"{', '.join(sorted(set(EXTENSIONS_TO_FORMATS.values())))}."
        )
    return input_format


def create_reader(input_format: str, stats: Optional[IngestStats] = None) -> BaseRecordReader:
    reader = SUPPORTED_FORMATS_TO_READERS.get(input_format, None)
    if reader is None:
        raise ValueError(f"Input format {input_format} is not supported.")
    return reader(stats)


def read_records(
    paths: Iterable[Union[str, Path]],
    input_format: str,
    stats: Optional[IngestStats] = None,
) -> Iterator[PostRecord]:
    """Chain the records of several files of the same format."""
    reader = create_reader(input_format, stats)
    for path in paths:
        logger.info("Reading %s records from %s", input_format, path)
        yield from reader.read(path)
