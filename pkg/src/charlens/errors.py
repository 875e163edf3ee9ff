"""Exception taxonomy shared by all engine modules.

Every error carries a stable ``code`` (snake_case class name) so the service
can emit structured ``{code, message, location}`` bodies without mapping
tables, and an optional ``location`` naming the offending element.
"""

from __future__ import annotations

import re


class CharlensError(Exception):
    """Base class for all engine errors."""

    def __init__(self, message: str, location: str | None = None):
        super().__init__(message)
        self.message = message
        self.location = location

    @property
    def code(self) -> str:
        name = type(self).__name__
        return re.sub(r"(?<!^)(?=[A-Z])", "_", name).lower()


# corpus
class EmptyDocument(CharlensError):
    pass


class PatternInvalid(CharlensError):
    pass


class SpanOutOfRange(CharlensError):
    pass


# annotations
class SchemaError(CharlensError):
    pass


class OffsetError(CharlensError):
    pass


class TreeError(CharlensError):
    pass


class RangeError(CharlensError):
    pass


# registry
class UnknownCluster(CharlensError):
    pass


class SelfMerge(CharlensError):
    pass


class CycleError(CharlensError):
    pass


# extractors
class LexiconMissing(CharlensError):
    pass


# dynamics
class DimensionMismatch(CharlensError):
    pass


class ParseError(CharlensError):
    pass


class AllOutOfVocabulary(CharlensError):
    pass


class ZeroDocumentFrequency(CharlensError):
    pass


# views
class UnsupportedCombination(CharlensError):
    pass


class NoRecords(CharlensError):
    pass


# service / persistence
class NotReady(CharlensError):
    pass


class UnknownProject(CharlensError):
    pass


class VersionUnsupported(CharlensError):
    pass


class CorruptFile(CharlensError):
    pass
