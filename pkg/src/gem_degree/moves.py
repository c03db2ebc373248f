"""Gem rewriting moves: h-dipoles and polyhedral glue moves.

Moves never mutate their input. Deleted vertices are compacted away with the
survivors keeping their relative order; labels travel with their vertices.
"""

from typing import Dict, Iterable, List, Sequence, Set, Tuple, Union

from loguru import logger

from .errors import BadColors, BadParam, GemError, InvalidDipole, InvalidGlueSpec
from .gem_core import new_gem, residues
from .models import DipoleSpec, Gem, GlueMoveSpec, VertexLabel, v
from .types import Edge, MoveLogEntry

LabelLike = Union[VertexLabel, str]


def _component_index(gem: Gem, colors: Iterable[int]) -> Dict[int, int]:
    """vertex -> index of its component in Γ_colors."""
    report = residues(gem, colors)
    return {
        vertex: index
        for index, component in enumerate(report.components)
        for vertex in component
    }


def _rebuild(gem: Gem, removed: Set[int], extra: Iterable[Edge] = ()) -> Gem:
    """Drop ``removed`` and every edge touching it, add ``extra``, compact ids."""
    kept = [i for i in range(gem.vertex_count) if i not in removed]
    position = {old: new for new, old in enumerate(kept)}
    edges = [
        (position[a], position[b], c)
        for a, b, c in list(gem.edges) + list(extra)
        if a not in removed and b not in removed
    ]
    return new_gem(gem.dimension, [gem.labels[i] for i in kept], edges)


def _check_dipole(gem: Gem, spec: DipoleSpec) -> None:
    n = gem.dimension
    for vertex in (spec.u, spec.v):
        if not (0 <= vertex < gem.vertex_count):
            raise InvalidDipole(f"vertex {vertex} outside 0..{gem.vertex_count - 1}")
    if spec.u == spec.v:
        raise InvalidDipole("a dipole needs two distinct vertices")
    if not (1 <= spec.h <= n):
        raise InvalidDipole(f"a dipole has 1..{n} colors, got {spec.h}")
    joined = gem.edge_colors(spec.u, spec.v)
    if joined != tuple(sorted(spec.colors)):
        raise InvalidDipole(
            f"vertices {spec.u}, {spec.v} are joined by colors {joined}, "
            f"not {tuple(spec.colors)}"
        )
    complement = set(gem.colors) - set(spec.colors)
    component = _component_index(gem, complement)
    if component[spec.u] == component[spec.v]:
        raise InvalidDipole(
            f"vertices {spec.u}, {spec.v} share a component of Γ restricted "
            f"to colors {sorted(complement)}"
        )


def is_dipole(gem: Gem, spec: DipoleSpec) -> bool:
    try:
        _check_dipole(gem, spec)
    except InvalidDipole:
        return False
    return True


def find_dipoles(gem: Gem, h: int) -> List[DipoleSpec]:
    """Every h-dipole of the gem, ordered by (u, v)."""
    if not (1 <= h <= gem.dimension):
        return []
    pairs = sorted({(a, b) for a, b, _ in gem.edges})
    found: List[DipoleSpec] = []
    components: Dict[Tuple[int, ...], Dict[int, int]] = {}
    for a, b in pairs:
        colors = gem.edge_colors(a, b)
        if len(colors) != h:
            continue
        if colors not in components:
            components[colors] = _component_index(gem, set(gem.colors) - set(colors))
        if components[colors][a] != components[colors][b]:
            found.append(DipoleSpec(u=a, v=b, colors=colors))
    logger.debug(f"found {len(found)} {h}-dipoles")
    return found


def dipole_spec(
    gem: Gem, first: LabelLike, second: LabelLike, colors: Iterable[int]
) -> DipoleSpec:
    """A DipoleSpec addressed by vertex labels."""
    return DipoleSpec(
        u=gem.vertex_by_label(first),
        v=gem.vertex_by_label(second),
        colors=tuple(sorted(colors)),
    )


def cancel_dipole(gem: Gem, spec: DipoleSpec) -> Gem:
    """Remove the dipole and join the outer c-neighbors for every c outside D.

    A color missing on one side (a boundary color-n half-edge) is dropped.

    Raises:
        InvalidDipole: the pair is not a dipole of this gem.
    """
    _check_dipole(gem, spec)
    extra: List[Edge] = []
    for color in gem.colors:
        if color in spec.colors:
            continue
        p, q = gem.neighbor(spec.u, color), gem.neighbor(spec.v, color)
        if p is not None and q is not None:
            extra.append((p, q, color))
    result = _rebuild(gem, {spec.u, spec.v}, extra)
    logger.info(
        f"cancelled {spec.h}-dipole ({gem.labels[spec.u]}, {gem.labels[spec.v]}) "
        f"colors {list(spec.colors)}: {gem.vertex_count} -> {result.vertex_count} vertices"
    )
    return result


def _fresh_labels(gem: Gem, count: int) -> List[VertexLabel]:
    taken = {str(label) for label in gem.labels}
    labels: List[VertexLabel] = []
    serial = gem.vertex_count
    while len(labels) < count:
        name = f"x{serial}"
        serial += 1
        if name not in taken:
            labels.append(VertexLabel(name=name))
    return labels


def add_dipole(gem: Gem, at: int, colors: Iterable[int]) -> Gem:
    """Insert an h-dipole next to ``at``; inverse of cancel_dipole.

    The new vertices get ids V (joined to ``at``) and V+1. For each color c
    outside D the c-edge at–w becomes at–V and (V+1)–w; where ``at`` has no
    color-n edge the new pair is left without one too.

    Raises:
        BadColors: D is empty, has more than n colors, or leaves Δ_n.
    """
    n = gem.dimension
    chosen = tuple(sorted(set(colors)))
    if not chosen or len(chosen) > n or not set(chosen) <= set(gem.colors):
        raise BadColors(f"dipole colors must be 1..{n} colors of 0..{n}, got {chosen}")
    if not (0 <= at < gem.vertex_count):
        raise BadParam(f"vertex {at} outside 0..{gem.vertex_count - 1}")

    u, w = gem.vertex_count, gem.vertex_count + 1
    dropped: Set[Edge] = set()
    extra: List[Edge] = [(u, w, c) for c in chosen]
    for color in gem.colors:
        if color in chosen:
            continue
        outer = gem.neighbor(at, color)
        if outer is None:
            if color != n:
                raise BadColors(f"vertex {at} has no edge of color {color}")
            continue
        dropped.add((min(at, outer), max(at, outer), color))
        extra += [(at, u, color), (w, outer, color)]

    edges = [edge for edge in gem.edges if edge not in dropped] + extra
    result = new_gem(n, list(gem.labels) + _fresh_labels(gem, 2), edges)
    logger.info(
        f"added {len(chosen)}-dipole at {gem.labels[at]} colors {list(chosen)}: "
        f"{gem.vertex_count} -> {result.vertex_count} vertices"
    )
    return result


def enlarge_by_dipoles(gem: Gem, count: int, at: int = 0) -> Gem:
    """Add ``count`` n-dipoles colored 0..n-1 at vertex ``at``."""
    if count < 0:
        raise BadParam(f"cannot add {count} dipoles")
    colors = range(gem.dimension)
    for _ in range(count):
        gem = add_dipole(gem, at, colors)
    return gem


def _check_glue(gem: Gem, spec: GlueMoveSpec) -> None:
    first, second = spec.lambda1, spec.lambda2
    i = spec.glue_color
    if not first or len(first) != len(second):
        raise InvalidGlueSpec("lambda1 and lambda2 must be nonempty and of equal length")
    members = list(first) + list(second)
    if len(set(members)) != len(members):
        raise InvalidGlueSpec("lambda1 and lambda2 must be disjoint sets")
    for vertex in members:
        if not (0 <= vertex < gem.vertex_count):
            raise InvalidGlueSpec(f"vertex {vertex} outside 0..{gem.vertex_count - 1}")
    if not (0 <= i <= gem.dimension):
        raise InvalidGlueSpec(f"glue color {i} outside 0..{gem.dimension}")

    phi = spec.phi
    inverse = {b: a for a, b in phi.items()}
    for a, b in phi.items():
        if gem.neighbor(a, i) != b:
            raise InvalidGlueSpec(f"{a} and phi({a}) = {b} are not joined by color {i}")
        for color in gem.colors:
            na, nb = gem.neighbor(a, color), gem.neighbor(b, color)
            if color == i:
                continue
            if (na in phi) != (nb in inverse) or (na in phi and phi[na] != nb):
                raise InvalidGlueSpec(
                    f"phi is not a color-isomorphism of the induced subgraphs "
                    f"(color {color} at {a})"
                )

    component = _component_index(gem, set(gem.colors) - {i})
    shared = {component[a] for a in first} & {component[b] for b in second}
    if shared:
        raise InvalidGlueSpec(
            f"lambda1 and lambda2 share a component of Γ without color {i}"
        )


def polyhedral_glue(gem: Gem, spec: GlueMoveSpec) -> Gem:
    """Remove lambda1 and lambda2, then rewire around them.

    For u in lambda1 and every color j other than glue_color, the outside
    j-neighbors of u and phi(u) are joined by color j. Only the structural conditions are checked:
    the caller is responsible for the subgraphs representing balls.

    Raises:
        InvalidGlueSpec: a structural condition fails, with the reason.
    """
    _check_glue(gem, spec)
    removed = set(spec.lambda1) | set(spec.lambda2)
    extra: List[Edge] = []
    for a, b in spec.phi.items():
        for color in gem.colors:
            if color == spec.glue_color:
                continue
            p, q = gem.neighbor(a, color), gem.neighbor(b, color)
            if p is None or q is None or p in removed or q in removed:
                continue
            extra.append((p, q, color))
    try:
        result = _rebuild(gem, removed, extra)
    except GemError as e:
        raise InvalidGlueSpec(f"rewired graph is not a valid gem: {e}") from e
    logger.info(
        f"glue move on color {spec.glue_color} removed {len(removed)} vertices: "
        f"{gem.vertex_count} -> {result.vertex_count}"
    )
    return result


def glue_spec(
    gem: Gem,
    lambda1: Sequence[LabelLike],
    lambda2: Sequence[LabelLike],
    glue_color: int,
) -> GlueMoveSpec:
    """A GlueMoveSpec addressed by vertex labels (phi pairs them positionally)."""
    return GlueMoveSpec(
        lambda1=tuple(gem.vertex_by_label(label) for label in lambda1),
        lambda2=tuple(gem.vertex_by_label(label) for label in lambda2),
        glue_color=glue_color,
    )


def _cylinder_degree(gem: Gem) -> int:
    n = gem.dimension
    rows = n + 1
    if gem.vertex_count % (2 * rows) != 0:
        raise BadParam(f"{gem.vertex_count} vertices do not form a cylinder grid")
    d = gem.vertex_count // (2 * rows)
    wanted = {v(j, k) for j in range(1, 2 * d + 1) for k in range(1, rows + 1)}
    if set(gem.labels) != wanted:
        raise BadParam("gem is not labelled as a cylinder gem v_j^k")
    return d


def _log_entry(kind: str, color: int, labels: Iterable[VertexLabel], after: Gem) -> MoveLogEntry:
    return {
        "kind": kind,
        "color": color,
        "vertices": [str(label) for label in labels],
        "vertices_after": after.vertex_count,
    }


def apply_glue_schedule(gem: Gem, d: int) -> Tuple[Gem, List[MoveLogEntry]]:
    """The d-1 color-n glue moves on a degree-d cylinder gem.

    Move j removes columns 2j and 2j+1 of the interior rows 2..n, pairing
    v_{2j}^k with v_{2j+1}^k.
    """
    n = gem.dimension
    log: List[MoveLogEntry] = []
    for j in range(1, d):
        first = [v(2 * j, k) for k in range(2, n + 1)]
        second = [v(2 * j + 1, k) for k in range(2, n + 1)]
        gem = polyhedral_glue(gem, glue_spec(gem, first, second, n))
        log.append(_log_entry("glue", n, first + second, gem))
    return gem, log


def reduce_cylinder(gem: Gem) -> Tuple[Gem, List[MoveLogEntry]]:
    """Reduce a cylinder gem v_j^k of degree d to the standard crystallization.

    Glue moves first, then the color-(n-1) 1-dipoles (v_{2j}^1, v_{2j+1}^1)
    and the color-(n-2) 1-dipoles (v_{2j}^{n+1}, v_{2j+1}^{n+1}).
    """
    n = gem.dimension
    d = _cylinder_degree(gem)
    gem, log = apply_glue_schedule(gem, d)
    for row, color in ((1, n - 1), (n + 1, n - 2)):
        for j in range(1, d):
            pair = (v(2 * j, row), v(2 * j + 1, row))
            gem = cancel_dipole(gem, dipole_spec(gem, pair[0], pair[1], [color]))
            log.append(_log_entry("cancel_dipole", color, pair, gem))
    logger.info(f"reduced degree-{d} cylinder gem to {gem.vertex_count} vertices")
    return gem, log
