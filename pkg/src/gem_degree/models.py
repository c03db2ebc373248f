"""Domain models for gem_degree."""

import re
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PrivateAttr,
    field_serializer,
    model_validator,
)

from .errors import (
    BadColor,
    BadParam,
    ColorClash,
    DuplicateEdge,
    LoopEdge,
    Mismatch,
    MissingColor,
    UnknownVertex,
    VertexOutOfRange,
)
from .types import Edge

_LABEL_RE = re.compile(r"^v(?:_(?P<series>\d+))?(?:\^(?P<level>\d+))?$")


def _structured_fields(text: str) -> Optional[Dict[str, Optional[int]]]:
    """series/level of a v_j^k, v_j or v^k spelling, None for anything else.

    Only the exact spelling str() produces counts, so "v_01" stays opaque.
    """
    match = _LABEL_RE.match(text)
    if match is None or text == "v":
        return None
    series, level = match.group("series"), match.group("level")
    fields = {
        "series": int(series) if series is not None else None,
        "level": int(level) if level is not None else None,
    }
    spelled = "v"
    if fields["series"] is not None:
        spelled += f"_{fields['series']}"
    if fields["level"] is not None:
        spelled += f"^{fields['level']}"
    return fields if spelled == text else None


class VertexLabel(BaseModel):
    """Name of a gem vertex.

    The constructions use v_j^k (series j, level k), v_j (series only) and
    v^k (level only). Gems read from documents may use any other opaque name.
    """

    model_config = ConfigDict(frozen=True)

    series: Optional[int] = Field(default=None, description="Column index j")
    level: Optional[int] = Field(default=None, description="Row index k")
    name: Optional[str] = Field(default=None, description="Opaque name")

    def __str__(self) -> str:
        if self.name is not None:
            return self.name
        text = "v"
        if self.series is not None:
            text += f"_{self.series}"
        if self.level is not None:
            text += f"^{self.level}"
        return text

    @model_validator(mode="before")
    @classmethod
    def _structured_names(cls, data: Any) -> Any:
        # a name spelled like v_j^k is that structured label
        if isinstance(data, dict) and data.get("name") is not None:
            if data.get("series") is None and data.get("level") is None:
                fields = _structured_fields(data["name"])
                if fields is not None:
                    return fields
        return data

    @classmethod
    def parse(cls, text: str) -> "VertexLabel":
        """Inverse of ``str(label)``."""
        fields = _structured_fields(text)
        if fields is None:
            return cls(name=text)
        return cls(**fields)

    @classmethod
    def coerce(cls, value: Union["VertexLabel", str, Dict[str, Any]]) -> "VertexLabel":
        if isinstance(value, VertexLabel):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        return cls.model_validate(value)


def v(series: Optional[int] = None, level: Optional[int] = None) -> VertexLabel:
    """Shorthand for the v_j^k labels of the constructions."""
    return VertexLabel(series=series, level=level)


def _canonical_edges(
    dimension: int, vertex_count: int, edges: Iterable[Sequence[int]]
) -> Tuple[Edge, ...]:
    """Validate raw edge triples and return them in canonical order."""
    seen: Dict[Tuple[int, int], int] = {}
    canonical = set()
    for index, raw in enumerate(edges):
        location = f"edges[{index}]"
        if len(raw) != 3:
            raise BadParam(f"edge must be a (u, v, color) triple, got {raw!r}", location)
        a, b, color = (int(x) for x in raw)
        if not (0 <= color <= dimension):
            raise BadColor(f"color {color} outside 0..{dimension}", location)
        for vertex in (a, b):
            if not (0 <= vertex < vertex_count):
                raise VertexOutOfRange(
                    f"vertex {vertex} outside 0..{vertex_count - 1}", location
                )
        if a == b:
            raise LoopEdge(f"edge joins vertex {a} to itself", location)
        key = (min(a, b), max(a, b), color)
        if key in canonical:
            raise DuplicateEdge(f"edge {key} listed twice", location)
        for vertex in (a, b):
            if (vertex, color) in seen:
                raise ColorClash(
                    f"vertex {vertex} has two edges of color {color}", location
                )
            seen[(vertex, color)] = index
        canonical.add(key)

    for vertex in range(vertex_count):
        for color in range(dimension):
            if (vertex, color) not in seen:
                raise MissingColor(
                    f"vertex {vertex} has no edge of color {color}",
                    f"labels[{vertex}]",
                )
    return tuple(sorted(canonical))


class Gem(BaseModel):
    """An (n+1)-colored multigraph without loops, possibly with boundary.

    Vertex ids are dense integers 0..V-1; ``labels[i]`` names vertex i. Every
    vertex carries exactly one edge of each color 0..n-1; the color-n edge is
    optional and vertices lacking it are boundary vertices. Edges are stored
    sorted by (min id, max id, color), so equality is structural.
    """

    model_config = ConfigDict(frozen=True)

    dimension: int = Field(..., description="n; colors are 0..n")
    labels: Tuple[VertexLabel, ...] = Field(..., description="One label per vertex id")
    edges: Tuple[Edge, ...] = Field(..., description="Canonical (u, v, color) triples")

    _adjacency: Optional[Tuple[Dict[int, int], ...]] = PrivateAttr(default=None)
    _graph: Optional[nx.MultiGraph] = PrivateAttr(default=None)

    @model_validator(mode="before")
    @classmethod
    def _validate_structure(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        dimension = int(data["dimension"])
        if dimension < 1:
            raise BadParam(f"dimension must be >= 1, got {dimension}", "dimension")
        labels = tuple(VertexLabel.coerce(label) for label in data["labels"])
        if len(set(labels)) != len(labels):
            raise BadParam("vertex labels must be unique", "labels")
        edges = _canonical_edges(dimension, len(labels), data["edges"])
        return {"dimension": dimension, "labels": labels, "edges": edges}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gem):
            return NotImplemented
        return (self.dimension, self.labels, self.edges) == (
            other.dimension,
            other.labels,
            other.edges,
        )

    def __hash__(self) -> int:
        return hash((self.dimension, self.labels, self.edges))

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def colors(self) -> Tuple[int, ...]:
        """Δ_n."""
        return tuple(range(self.dimension + 1))

    @property
    def adjacency(self) -> Tuple[Dict[int, int], ...]:
        """Per vertex, the map color -> neighbor."""
        if self._adjacency is None:
            adjacency: List[Dict[int, int]] = [{} for _ in self.labels]
            for a, b, color in self.edges:
                adjacency[a][color] = b
                adjacency[b][color] = a
            self._adjacency = tuple(adjacency)
        return self._adjacency

    @property
    def graph(self) -> nx.MultiGraph:
        """networkx view: nodes are ids, edge keys and ``color`` attrs are colors.

        Shared between calls; treat as read-only.
        """
        if self._graph is None:
            graph = nx.MultiGraph()
            graph.add_nodes_from(range(self.vertex_count))
            for a, b, color in self.edges:
                graph.add_edge(a, b, key=color, color=color)
            self._graph = graph
        return self._graph

    def neighbor(self, vertex: int, color: int) -> Optional[int]:
        """The color-``color`` neighbor of ``vertex`` (None at a boundary)."""
        return self.adjacency[vertex].get(color)

    def edge_colors(self, a: int, b: int) -> Tuple[int, ...]:
        """Colors of the edges joining a and b, ascending."""
        return tuple(sorted(c for c, w in self.adjacency[a].items() if w == b))

    def vertex_by_label(self, label: Union[VertexLabel, str]) -> int:
        wanted = VertexLabel.coerce(label)
        try:
            return self.labels.index(wanted)
        except ValueError:
            raise UnknownVertex(f"no vertex labelled {wanted}") from None

    def boundary_vertices(self) -> List[int]:
        return [i for i, adj in enumerate(self.adjacency) if self.dimension not in adj]

    def internal_vertices(self) -> List[int]:
        return [i for i, adj in enumerate(self.adjacency) if self.dimension in adj]

    def is_bipartite(self) -> bool:
        return bool(nx.is_bipartite(self.graph))

    def is_connected(self) -> bool:
        return self.vertex_count > 0 and bool(nx.is_connected(self.graph))


class ResidueReport(BaseModel):
    """Connected components of the subgraph Γ_C."""

    model_config = ConfigDict(frozen=True)

    colors: Tuple[int, ...] = Field(..., description="The color set C, ascending")
    component_count: int = Field(..., description="g_C")
    components: Tuple[Tuple[int, ...], ...] = Field(
        ..., description="Components with ids ascending, ordered by least id"
    )


class Orientation(BaseModel):
    """A ±1 sign per vertex; adjacent vertices carry opposite signs."""

    model_config = ConfigDict(frozen=True)

    signs: Tuple[int, ...] = Field(..., description="sign(v) for v = 0..V-1")
    root: int = Field(..., description="Vertex whose sign was fixed")

    def sign(self, vertex: int) -> int:
        return self.signs[vertex]

    def positives(self) -> List[int]:
        return [i for i, s in enumerate(self.signs) if s > 0]

    def negatives(self) -> List[int]:
        return [i for i, s in enumerate(self.signs) if s < 0]


class FVector(BaseModel):
    """Simplex counts f_0..f_n of K(Γ)."""

    model_config = ConfigDict(frozen=True)

    counts: Tuple[int, ...] = Field(..., description="f_k = number of k-simplices")

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * f for k, f in enumerate(self.counts))


class GemReport(BaseModel):
    """Structural summary of a validated gem (the ``verify`` output)."""

    model_config = ConfigDict(frozen=True)

    dimension: int
    vertices: int
    closed: bool
    connected: bool
    bipartite: bool
    contracted: Optional[bool] = Field(
        default=None, description="Only defined for closed gems"
    )
    boundary_vertices: List[int] = Field(default_factory=list)


class DipoleSpec(BaseModel):
    """Two vertices joined by exactly the edges colored by ``colors``."""

    model_config = ConfigDict(frozen=True)

    u: int
    v: int
    colors: Tuple[int, ...] = Field(..., description="The dipole colors D, ascending")

    @property
    def h(self) -> int:
        return len(self.colors)


class GlueMoveSpec(BaseModel):
    """A polyhedral glue move; phi pairs lambda1[t] with lambda2[t]."""

    model_config = ConfigDict(frozen=True)

    lambda1: Tuple[int, ...]
    lambda2: Tuple[int, ...]
    glue_color: int

    @property
    def phi(self) -> Dict[int, int]:
        return dict(zip(self.lambda1, self.lambda2))


def _canonical_order(order: Sequence[int]) -> Tuple[int, ...]:
    """Rotate 0 to the front and pick the direction with ε₁ < ε_n."""
    start = list(order).index(0)
    rotated = tuple(order[start:]) + tuple(order[:start])
    reflected = (rotated[0],) + tuple(reversed(rotated[1:]))
    return min(rotated, reflected)


class CyclicPermutation(BaseModel):
    """A cyclic arrangement ε of Δ_n, stored in canonical form.

    Any rotation or reversal passed in is normalised so that ε₀ = 0 and
    ε₁ < ε_n.
    """

    model_config = ConfigDict(frozen=True)

    order: Tuple[int, ...]

    @model_validator(mode="before")
    @classmethod
    def _canonicalize(cls, data: Any) -> Any:
        if isinstance(data, dict) and "order" in data:
            order = tuple(int(c) for c in data["order"])
            if sorted(order) != list(range(len(order))) or len(order) < 2:
                raise BadParam(f"{order} is not a permutation of 0..n", "order")
            return {"order": _canonical_order(order)}
        return data

    @classmethod
    def canonical(cls, order: Sequence[int]) -> "CyclicPermutation":
        """Any rotation or reversal of ``order``, canonicalised."""
        return cls(order=tuple(order))

    @property
    def dimension(self) -> int:
        return len(self.order) - 1

    def pairs(self) -> List[Tuple[int, int]]:
        """Cyclically adjacent color pairs (ε_i, ε_{i+1})."""
        size = len(self.order)
        return [(self.order[i], self.order[(i + 1) % size]) for i in range(size)]


class PermutationGenus(BaseModel):
    """χ_ε and ρ_ε for one cyclic permutation."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    chi: int
    rho: Fraction

    @field_serializer("rho")
    def _rho_text(self, rho: Fraction) -> str:
        return str(rho)


class GenusReport(BaseModel):
    """χ_ε, ρ_ε for every canonical ε, and the regular genus ρ(Γ)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    per_permutation: Dict[Tuple[int, ...], PermutationGenus]
    regular_genus: Fraction
    argmin: CyclicPermutation

    @field_serializer("regular_genus")
    def _genus_text(self, genus: Fraction) -> str:
        return str(genus)

    @field_serializer("per_permutation")
    def _table(
        self, table: Dict[Tuple[int, ...], PermutationGenus]
    ) -> Dict[str, Dict[str, Any]]:
        return {
            ",".join(str(c) for c in order): {"chi": row.chi, "rho": str(row.rho)}
            for order, row in table.items()
        }


class SphereCertificate(BaseModel):
    """Genus-zero sphere recognition and its residue-by-residue variant."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    is_sphere: bool
    regular_genus: Fraction
    hereditary_certificate: bool

    @field_serializer("regular_genus")
    def _genus_text(self, genus: Fraction) -> str:
        return str(genus)

    def __bool__(self) -> bool:
        return self.is_sphere


class ColoredVertexMap(BaseModel):
    """A vertex map g: V(source) -> V(target) between gems of one dimension.

    The edge contract (images of a color-i edge coincide or span a color-i
    edge) is checked by ``degree_maps.validate_map``, not here.
    """

    model_config = ConfigDict(frozen=True)

    source: Gem
    target: Gem
    assignment: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_shape(self) -> "ColoredVertexMap":
        if self.source.dimension != self.target.dimension:
            raise Mismatch(
                f"source dimension {self.source.dimension} != "
                f"target dimension {self.target.dimension}"
            )
        if len(self.assignment) != self.source.vertex_count:
            raise Mismatch(
                f"assignment has {len(self.assignment)} entries for "
                f"{self.source.vertex_count} source vertices",
                "assignment",
            )
        for index, image in enumerate(self.assignment):
            if not (0 <= image < self.target.vertex_count):
                raise VertexOutOfRange(
                    f"image {image} outside 0..{self.target.vertex_count - 1}",
                    f"assignment[{index}]",
                )
        return self

    def __call__(self, vertex: int) -> int:
        return self.assignment[vertex]

    def preimage(self, vertex: int) -> List[int]:
        return [u for u, image in enumerate(self.assignment) if image == vertex]

    def is_surjective(self) -> bool:
        return len(set(self.assignment)) == self.target.vertex_count


class DegreeResult(BaseModel):
    """d_f with the per-target signed preimage counts behind it."""

    model_config = ConfigDict(frozen=True)

    degree: int
    surjective: bool
    per_target: Dict[int, int] = Field(
        default_factory=dict, description="sign(v) * algebraic number of g^-1(v)"
    )


class MapSection(BaseModel):
    """The ``map`` part of a GemDocument describing a ColoredVertexMap."""

    target: "GemDocument"
    assignment: List[int]


class GemDocument(BaseModel):
    """On-disk form of a gem, optionally carrying a map to an inline target."""

    format_version: int = 1
    dimension: int
    labels: List[str]
    edges: List[Tuple[int, int, int]]
    map: Optional[MapSection] = None


MapSection.model_rebuild()
