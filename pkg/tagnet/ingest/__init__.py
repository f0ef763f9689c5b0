"""Ingest API"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Iterator, List, Optional, TextIO, Union


@dataclass(frozen=True)
class PostRecord:
    """One tagged bookmark: the URL, when it was submitted and its raw tags."""

    url: str
    tags: List[str] = field(default_factory=list)
    timestamp: Optional[datetime] = None

    def __post_init__(self):
        if not isinstance(self.url, str) or not self.url.strip():
            raise ValueError("A PostRecord needs a nonempty url.")


@dataclass(frozen=True)
class NormalizationPolicy:
    """How raw tag strings are canonicalized before aggregation."""

    case_fold: bool = True
    trim_whitespace: bool = True
    drop_empty: bool = True


@dataclass
class IngestStats:
    """Bookkeeping collected while reading records."""

    records_read: int = 0
    skipped_items: int = 0
    warnings: List[str] = field(default_factory=list)

    def warn(self, message: str):
        self.warnings.append(message)


class BaseRecordReader(ABC):
    @property
    @abstractmethod
    def NAME(self):
        pass

    def __init__(self, stats: Optional[IngestStats] = None):
        self.stats = stats if stats is not None else IngestStats()

    @abstractmethod
    def iter_records(self, stream: TextIO, source: str = "<string>") -> Iterator[PostRecord]:
        pass

    def read(self, path: Union[str, Path]) -> Iterator[PostRecord]:
        """Lazily read every record of a UTF-8 file.

        Args:
            path (Union[str, Path]): file to read

        Returns:
            Iterator[PostRecord]: records in file order
        """
        with open(path, encoding="utf-8", newline="") as stream:
            yield from self.iter_records(stream, source=str(path))

    def __call__(self, path: Union[str, Path]) -> Iterator[PostRecord]:
        return self.read(path)
