"""GemDocument serialization and DOT export."""

from typing import Union

import graphviz
from loguru import logger
from pydantic import ValidationError

from .degree_maps import validate_map
from .errors import DocumentSyntaxError, InvalidMap
from .gem_core import new_gem
from .models import ColoredVertexMap, Gem, GemDocument, MapSection

# colors beyond the palette cycle
_PALETTE = ("black", "red", "blue", "darkgreen", "orange", "purple", "brown", "gray")


def to_document(gem: Gem) -> GemDocument:
    """The GemDocument form of ``gem``."""
    return GemDocument(
        dimension=gem.dimension,
        labels=[str(label) for label in gem.labels],
        edges=[tuple(edge) for edge in gem.edges],
    )


def serialize(gem: Gem) -> str:
    """Canonical JSON text; equal gems give identical bytes."""
    return to_document(gem).model_dump_json(indent=2)


def serialize_map(m: ColoredVertexMap) -> str:
    """The source gem with a ``map`` section carrying the target inline."""
    document = to_document(m.source)
    document.map = MapSection(target=to_document(m.target), assignment=list(m.assignment))
    return document.model_dump_json(indent=2)


def _gem_of(document: GemDocument) -> Gem:
    return new_gem(document.dimension, document.labels, document.edges)


def parse(text: str) -> Union[Gem, ColoredVertexMap]:
    """Read a GemDocument; a document with a ``map`` section yields a map.

    Raises:
        DocumentSyntaxError: the text is not a GemDocument.
        InvalidMap: the map breaks the edge contract.
        GemError: any gem validation failure, with its location.
    """
    try:
        document = GemDocument.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or None
        raise DocumentSyntaxError(first["msg"], location) from e
    if document.format_version != 1:
        raise DocumentSyntaxError(
            f"unsupported format_version {document.format_version}", "format_version"
        )

    gem = _gem_of(document)
    if document.map is None:
        return gem
    m = ColoredVertexMap(
        source=gem, target=_gem_of(document.map.target), assignment=document.map.assignment
    )
    violations = validate_map(m)
    if violations:
        edge = violations[0]["edge"]
        raise InvalidMap(
            f"{len(violations)} edges break the edge contract", f"edges {list(edge)}"
        )
    return m


def export_dot(gem: Gem) -> str:
    """DOT source: one node per vertex, one edge per colored edge.

    Parallel edges between the same pair are emitted consecutively.
    """
    dot = graphviz.Graph(comment=f"{gem.dimension}-dimensional gem")
    dot.attr("node", shape="circle", fontname="Arial")
    for vertex, label in enumerate(gem.labels):
        dot.node(str(vertex), str(label))
    for a, b, color in gem.edges:
        dot.edge(
            str(a),
            str(b),
            label=str(color),
            color=_PALETTE[color % len(_PALETTE)],
        )
    logger.debug(f"exported {gem.vertex_count} nodes and {len(gem.edges)} edges to DOT")
    return dot.source
