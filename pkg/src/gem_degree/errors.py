"""Exception hierarchy for gem_degree.

Every error carries a stable ``code`` so callers (and the CLI) can report it
as a machine-readable record.
"""

from typing import Optional

from .types import ErrorRecord


class GemError(Exception):
    """Base class for all gem_degree errors.

    Not a ``ValueError``: raised inside a pydantic validator it propagates
    unchanged instead of becoming a ValidationError.
    """

    code = "GemError"

    def __init__(self, message: str, location: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.location = location

    def __str__(self) -> str:
        if self.location is None:
            return f"{self.code}: {self.message}"
        return f"{self.code} at {self.location}: {self.message}"

    def to_record(self) -> ErrorRecord:
        """Machine-readable form of this error."""
        return {"code": self.code, "message": self.message, "location": self.location}


# -- gem structure --


class LoopEdge(GemError):
    code = "LoopEdge"


class ColorClash(GemError):
    code = "ColorClash"


class MissingColor(GemError):
    code = "MissingColor"


class BadColor(GemError):
    code = "BadColor"


class DuplicateEdge(GemError):
    code = "DuplicateEdge"


class VertexOutOfRange(GemError):
    code = "VertexOutOfRange"


class NotBipartite(GemError):
    code = "NotBipartite"


class Disconnected(GemError):
    code = "Disconnected"


class NotClosed(GemError):
    code = "NotClosed"


class NoBoundary(GemError):
    code = "NoBoundary"


class OddVertexCount(GemError):
    code = "OddVertexCount"


class BadParam(GemError):
    code = "BadParam"


# -- moves --


class InvalidDipole(GemError):
    code = "InvalidDipole"


class BadColors(GemError):
    code = "BadColors"


class InvalidGlueSpec(GemError):
    code = "InvalidGlueSpec"


# -- maps --


class InvalidMap(GemError):
    code = "InvalidMap"


class InconsistentDegree(GemError):
    code = "InconsistentDegree"


class UnknownVertex(GemError):
    code = "UnknownVertex"


class UnsupportedTarget(GemError):
    code = "UnsupportedTarget"


class Mismatch(GemError):
    code = "Mismatch"


# -- documents --


class DocumentSyntaxError(GemError):
    """Malformed GemDocument text (reported with code ``SyntaxError``)."""

    code = "SyntaxError"
