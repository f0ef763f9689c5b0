"""Exceptions raised by tagnet.

Every error derives from ``ValueError`` so code that already guards calls with
``except ValueError`` keeps working.
"""

from typing import Optional


class TagnetError(ValueError):
    """Base class for all tagnet errors."""


class RecordParseError(TagnetError):
    """A tagged-bookmark record could not be parsed."""

    def __init__(self, reason: str, line: Optional[int] = None, source: str = "<string>"):
        self.reason = reason
        self.line = line
        self.source = source
        location = source if line is None else f"{source}:{line}"
        super().__init__(f"{location}: {reason}")


class SnapshotFormatError(TagnetError):
    """A graph snapshot file is malformed."""


class EmptyGraphError(TagnetError):
    pass


class NodeIndexError(TagnetError, IndexError):
    pass


class FitDegenerateError(TagnetError):
    """Not enough usable points to fit a line in log-log space."""


class UndefinedClusteringError(TagnetError):
    pass


class NoConnectedPairsError(TagnetError):
    pass


class BaselineUndefinedError(TagnetError):
    """The Erdős–Rényi estimate diverges (n <= 1 or <k> <= 1)."""


class GeneratorSpecError(TagnetError):
    pass


class GraphInvariantError(TagnetError, AssertionError):
    """A structural property of a TagGraph does not hold."""
