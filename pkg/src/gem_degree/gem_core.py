"""Colored multigraph data model: validation, residues, orientation, boundary."""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
from networkx.algorithms import isomorphism
from loguru import logger

from .errors import (
    BadColor,
    BadParam,
    Disconnected,
    NoBoundary,
    NotBipartite,
    NotClosed,
    VertexOutOfRange,
)
from .models import Gem, Orientation, ResidueReport, VertexLabel
from .types import Edge

LabelLike = Union[VertexLabel, str]


def new_gem(
    dimension: int,
    labels: Sequence[LabelLike],
    edges: Iterable[Sequence[int]],
) -> Gem:
    """Build a validated gem.

    Raises:
        LoopEdge, ColorClash, MissingColor, BadColor, DuplicateEdge,
        VertexOutOfRange: the edge set breaks the colored-graph rules.
    """
    return Gem(dimension=dimension, labels=list(labels), edges=list(edges))


def is_closed(gem: Gem) -> bool:
    """True iff every vertex carries a color-n edge."""
    n = gem.dimension
    return all(n in adj for adj in gem.adjacency)


def require_closed(gem: Gem) -> None:
    if not is_closed(gem):
        raise NotClosed(
            f"gem has {len(gem.boundary_vertices())} boundary vertices; "
            "operation needs a closed gem"
        )


def _check_colors(gem: Gem, colors: Iterable[int]) -> Tuple[int, ...]:
    chosen = tuple(sorted(set(int(c) for c in colors)))
    for color in chosen:
        if not (0 <= color <= gem.dimension):
            raise BadColor(f"color {color} outside 0..{gem.dimension}")
    return chosen


def residues(gem: Gem, colors: Iterable[int]) -> ResidueReport:
    """Connected components of Γ_C, the spanning subgraph with colors in C."""
    chosen = _check_colors(gem, colors)
    allowed = set(chosen)
    view = nx.subgraph_view(gem.graph, filter_edge=lambda a, b, key: key in allowed)
    components = sorted(
        (tuple(sorted(component)) for component in nx.connected_components(view)),
        key=lambda component: component[0],
    )
    return ResidueReport(
        colors=chosen, component_count=len(components), components=tuple(components)
    )


def residue_count(gem: Gem, colors: Iterable[int]) -> int:
    """g_C."""
    return residues(gem, colors).component_count


def orientation(gem: Gem, root: int = 0) -> Orientation:
    """Signs by adjacency alternation, with ``root`` positive.

    Raises:
        Disconnected: the gem has more than one component.
        NotBipartite: an odd closed walk exists.
    """
    if not (0 <= root < gem.vertex_count):
        raise VertexOutOfRange(f"root {root} outside 0..{gem.vertex_count - 1}")
    distances = nx.single_source_shortest_path_length(gem.graph, root)
    if len(distances) != gem.vertex_count:
        raise Disconnected(
            f"only {len(distances)} of {gem.vertex_count} vertices reachable "
            f"from vertex {root}"
        )
    signs = tuple(1 if distances[i] % 2 == 0 else -1 for i in range(gem.vertex_count))
    for a, b, color in gem.edges:
        if signs[a] == signs[b]:
            raise NotBipartite(
                f"edge ({a}, {b}) of color {color} closes an odd cycle",
                f"edge ({a}, {b}, {color})",
            )
    return Orientation(signs=signs, root=root)


def flip(o: Orientation) -> Orientation:
    """The opposite orientation (root made negative)."""
    return Orientation(signs=tuple(-s for s in o.signs), root=o.root)


def is_bipartite(gem: Gem) -> bool:
    return gem.is_bipartite()


def is_connected(gem: Gem) -> bool:
    return gem.is_connected()


def is_contracted(gem: Gem) -> bool:
    """True iff every Γ_ĵ is connected."""
    require_closed(gem)
    everything = set(gem.colors)
    return all(residue_count(gem, everything - {j}) == 1 for j in gem.colors)


def boundary_graph(gem: Gem) -> Gem:
    """∂Γ: boundary vertices joined by color j along alternating (j, n)-paths.

    The result has dimension n-1 and keeps the input labels.
    """
    n = gem.dimension
    boundary = gem.boundary_vertices()
    if not boundary:
        raise NoBoundary("gem is closed; it has no boundary vertices")
    if n < 2:
        raise BadParam("the boundary of a 1-dimensional gem is not a gem")

    position = {vertex: index for index, vertex in enumerate(boundary)}
    edges = set()
    for start in boundary:
        for color in range(n):
            current = gem.neighbor(start, color)
            # internal vertices always carry color n, so the walk ends on a
            # boundary vertex right after a color-j step
            while current is not None and n in gem.adjacency[current]:
                current = gem.neighbor(gem.neighbor(current, n), color)  # type: ignore[arg-type]
            assert current is not None
            a, b = position[start], position[current]
            edges.add((min(a, b), max(a, b), color))

    logger.debug(f"boundary graph: {len(boundary)} vertices, {len(edges)} edges")
    return new_gem(n - 1, [gem.labels[i] for i in boundary], sorted(edges))


def restrict_colors(gem: Gem, colors: Iterable[int]) -> List[Edge]:
    """Edges of ``gem`` whose color lies in ``colors``."""
    allowed = set(_check_colors(gem, colors))
    return [edge for edge in gem.edges if edge[2] in allowed]


def residue_subgem(gem: Gem, colors: Iterable[int], component: Sequence[int]) -> Gem:
    """A component of Γ_C re-read as a gem of dimension |C|-1.

    Colors are renumbered in ascending order; vertex ids follow ``component``.
    """
    chosen = _check_colors(gem, colors)
    if len(chosen) < 2:
        raise BadParam("a residue gem needs at least two colors")
    recolor = {color: index for index, color in enumerate(chosen)}
    position = {vertex: index for index, vertex in enumerate(component)}
    edges = [
        (position[a], position[b], recolor[color])
        for a, b, color in gem.edges
        if color in recolor and a in position and b in position
    ]
    return new_gem(len(chosen) - 1, [gem.labels[i] for i in component], edges)


def disjoint_union(first: Gem, second: Gem, dimension: Optional[int] = None) -> Gem:
    """Both gems side by side; ids of ``second`` are shifted by V(first)."""
    shift = first.vertex_count
    edges = list(first.edges) + [(a + shift, b + shift, c) for a, b, c in second.edges]
    return new_gem(
        dimension if dimension is not None else max(first.dimension, second.dimension),
        list(first.labels) + list(second.labels),
        edges,
    )


def _profile_graph(gem: Gem) -> nx.MultiGraph:
    graph = gem.graph.copy()
    for vertex, adj in enumerate(gem.adjacency):
        graph.nodes[vertex]["profile"] = tuple(sorted(adj))
    return graph


def color_isomorphic(a: Gem, b: Gem) -> Optional[Dict[int, int]]:
    """A bijection φ with (u, v, c) in a iff (φu, φv, c) in b, or None.

    Colors are fixed pointwise. Backtracking (VF2) is seeded by each vertex's
    incident color profile.
    """
    size_a = (a.dimension, a.vertex_count, len(a.edges))
    size_b = (b.dimension, b.vertex_count, len(b.edges))
    if size_a != size_b:
        logger.debug(
            f"no color isomorphism: (dimension, vertices, edges) {size_a} vs {size_b}"
        )
        return None
    matcher = isomorphism.MultiGraphMatcher(
        _profile_graph(a),
        _profile_graph(b),
        node_match=isomorphism.categorical_node_match("profile", None),
        edge_match=isomorphism.categorical_multiedge_match("color", None),
    )
    for mapping in matcher.isomorphisms_iter():
        return {int(k): int(val) for k, val in mapping.items()}
    logger.debug(f"no color isomorphism between {a.vertex_count}-vertex gems")
    return None
