"""Type definitions for gem_degree."""

from typing import List, Optional, Tuple, TypedDict

# (u, v, color) with u < v once stored in a Gem
Edge = Tuple[int, int, int]


class ErrorRecord(TypedDict):
    """Machine-readable error record emitted by the CLI."""

    code: str
    message: str
    location: Optional[str]


class EdgeViolation(TypedDict):
    """A source edge whose image breaks the colored-map edge contract."""

    edge: Edge
    image: Tuple[int, int]


class MoveLogEntry(TypedDict):
    """One step of a reduction schedule.

    kind is "glue" or "cancel_dipole"; vertices are labels (ids shift between
    steps) and vertices_after is the vertex count once the step is applied.
    """

    kind: str
    color: int
    vertices: List[str]
    vertices_after: int
