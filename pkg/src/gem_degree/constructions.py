"""Builders for the gem families of Sⁿ, Sⁿ⁻¹×I and Sⁿ⁻¹×S¹.

Cylinder-type gems use labels v_j^k with column j = 1..2d and row k = 1..n+1,
laid out row-major (id = (k-1)·2d + (j-1)). Rows 1 and n+1 are the boundary
rows.
"""

from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from loguru import logger

from .errors import BadParam
from .gem_core import new_gem
from .models import Gem, VertexLabel, v

LabelEdge = Tuple[VertexLabel, VertexLabel, int]


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise BadParam(message)


def _assemble(
    dimension: int, labels: Sequence[VertexLabel], edges: Iterable[LabelEdge]
) -> Gem:
    index = {label: i for i, label in enumerate(labels)}
    return new_gem(dimension, labels, [(index[a], index[b], c) for a, b, c in edges])


def vertical_color(n: int, k: int) -> int:
    """Color of the edge between rows k and k+1 (1 <= k <= n)."""
    return n - 1 if k == 1 else k - 2


def horizontal_colors(n: int, k: int) -> List[int]:
    """Colors < n joining the two columns of a block on row k.

    Every color 0..n-1 not already used by the vertical edges at row k.
    """
    incident = set()
    if k >= 2:
        incident.add(vertical_color(n, k - 1))
    if k <= n:
        incident.add(vertical_color(n, k))
    return [c for c in range(n) if c not in incident]


def gluing_pairs(n: int, d: int) -> List[Tuple[int, int]]:
    """Columns (j, j') with v_j^1 joined to v_{j'}^{n+1} by color n.

    n odd: v_1^1–v_1^{n+1} and v_j^1–v_{2d+2-j}^{n+1};
    n even: v_{2d}^1–v_1^{n+1} and v_j^1–v_{j+1}^{n+1}.
    """
    if n % 2 == 1:
        return [(1, 1)] + [(j, 2 * d + 2 - j) for j in range(2, 2 * d + 1)]
    return [(2 * d, 1)] + [(j, j + 1) for j in range(1, 2 * d)]


def standard_sphere(n: int) -> Gem:
    """Two vertices v^1, v^2 joined by one edge of every color."""
    _require(n >= 1, f"standard_sphere needs n >= 1, got {n}")
    return new_gem(n, [v(level=1), v(level=2)], [(0, 1, c) for c in range(n + 1)])


def necklace_sphere(n: int, d: int) -> Gem:
    """The 2d-vertex gem of Sⁿ behind a degree-d self-map.

    v_{2j-1}–v_{2j} carry colors 0..n-1; color n closes the necklace through
    v_{2j}–v_{2j+1} and v_{2d}–v_1.
    """
    _require(n >= 1, f"necklace_sphere needs n >= 1, got {n}")
    _require(d >= 1, f"necklace_sphere needs d >= 1, got {d}")
    labels = [v(series=j) for j in range(1, 2 * d + 1)]
    edges: List[LabelEdge] = []
    for j in range(1, d + 1):
        edges += [(v(2 * j - 1), v(2 * j), c) for c in range(n)]
    edges += [(v(2 * j), v(2 * j + 1), n) for j in range(1, d)]
    edges.append((v(1), v(2 * d), n))
    logger.info(f"necklace_sphere(n={n}, d={d}): {len(labels)} vertices")
    return _assemble(n, labels, edges)


def _cylinder_edges(n: int, d: int) -> List[LabelEdge]:
    edges: List[LabelEdge] = []
    for j in range(1, 2 * d + 1):
        edges += [(v(j, k), v(j, k + 1), vertical_color(n, k)) for k in range(1, n + 1)]
    for k in range(1, n + 2):
        for b in range(1, d + 1):
            edges += [(v(2 * b - 1, k), v(2 * b, k), c) for c in horizontal_colors(n, k)]
    for k in range(2, n + 1):
        edges += [(v(2 * b, k), v(2 * b + 1, k), n) for b in range(1, d)]
        edges.append((v(1, k), v(2 * d, k), n))
    return edges


def _grid_labels(n: int, d: int) -> List[VertexLabel]:
    return [v(j, k) for k in range(1, n + 2) for j in range(1, 2 * d + 1)]


def cylinder_gem(n: int, d: int) -> Gem:
    """The 2d(n+1)-vertex gem of Sⁿ⁻¹×I; d = 1 is its standard crystallization."""
    _require(n >= 2, f"cylinder_gem needs n >= 2, got {n}")
    _require(d >= 1, f"cylinder_gem needs d >= 1, got {d}")
    gem = _assemble(n, _grid_labels(n, d), _cylinder_edges(n, d))
    logger.info(f"cylinder_gem(n={n}, d={d}): {gem.vertex_count} vertices")
    return gem


def product_standard(n: int) -> Gem:
    """The standard 2(n+1)-vertex crystallization of Sⁿ⁻¹×S¹.

    n odd: v_1^1–v_1^{n+1}, v_2^1–v_2^{n+1}; n even: crossed.
    """
    _require(n >= 2, f"product_standard needs n >= 2, got {n}")
    edges = _cylinder_edges(n, 1)
    if n % 2 == 1:
        edges += [(v(1, 1), v(1, n + 1), n), (v(2, 1), v(2, n + 1), n)]
    else:
        edges += [(v(1, 1), v(2, n + 1), n), (v(2, 1), v(1, n + 1), n)]
    return _assemble(n, _grid_labels(n, 1), edges)


def product_gem(n: int, d: int) -> Gem:
    """cylinder_gem(n, d) closed up by the parity gluing rules: a gem of Sⁿ⁻¹×S¹."""
    _require(n >= 2, f"product_gem needs n >= 2, got {n}")
    _require(d >= 1, f"product_gem needs d >= 1, got {d}")
    edges = _cylinder_edges(n, d)
    edges += [(v(a, 1), v(b, n + 1), n) for a, b in gluing_pairs(n, d)]
    gem = _assemble(n, _grid_labels(n, d), edges)
    logger.info(f"product_gem(n={n}, d={d}): {gem.vertex_count} vertices")
    return gem


def _necklace_edges(n: int, d: int, row: int) -> List[LabelEdge]:
    link = vertical_color(n, 1) if row == 1 else vertical_color(n, n)
    edges: List[LabelEdge] = []
    for b in range(1, d + 1):
        edges += [(v(2 * b - 1, row), v(2 * b, row), c) for c in horizontal_colors(n, row)]
    edges += [(v(2 * b, row), v(2 * b + 1, row), link) for b in range(1, d)]
    edges.append((v(1, row), v(2 * d, row), link))
    return edges


def boundary_necklace(n: int, d: int, row: int) -> Gem:
    """A boundary component of cylinder_gem(n, d), built directly.

    row 1: pair colors 0..n-2, link color n-1.
    row n+1: pair colors n-1, 0..n-3, link color n-2.
    """
    _require(n >= 2 and d >= 1, f"boundary_necklace needs n >= 2, d >= 1, got {n}, {d}")
    _require(row in (1, n + 1), f"row must be 1 or {n + 1}, got {row}")
    labels = [v(j, row) for j in range(1, 2 * d + 1)]
    return _assemble(n - 1, labels, _necklace_edges(n, d, row))


def glued_sphere(n: int, d: int) -> Gem:
    """The two boundary necklaces joined by color n with the product gluing rules.

    A 4d-vertex gem of Sⁿ.
    """
    _require(n >= 2, f"glued_sphere needs n >= 2, got {n}")
    _require(d >= 1, f"glued_sphere needs d >= 1, got {d}")
    labels = [v(j, 1) for j in range(1, 2 * d + 1)]
    labels += [v(j, n + 1) for j in range(1, 2 * d + 1)]
    edges = _necklace_edges(n, d, 1) + _necklace_edges(n, d, n + 1)
    edges += [(v(a, 1), v(b, n + 1), n) for a, b in gluing_pairs(n, d)]
    return _assemble(n, labels, edges)


def reduced_cylinder(n: int, d: int) -> Gem:
    """cylinder_gem(n, d) after its d-1 glue moves, built directly.

    Interior rows keep only columns 1 and 2d; boundary rows keep every column
    and gain the links v_{2j}–v_{2j+1} (color n-1 on row 1, n-2 on row n+1).
    """
    _require(n >= 2, f"reduced_cylinder needs n >= 2, got {n}")
    _require(d >= 1, f"reduced_cylinder needs d >= 1, got {d}")
    last = 2 * d
    labels = [v(j, 1) for j in range(1, last + 1)]
    for k in range(2, n + 1):
        labels += [v(1, k), v(last, k)]
    labels += [v(j, n + 1) for j in range(1, last + 1)]

    edges: List[LabelEdge] = []
    for row in (1, n + 1):
        for b in range(1, d + 1):
            edges += [
                (v(2 * b - 1, row), v(2 * b, row), c) for c in horizontal_colors(n, row)
            ]
        link = vertical_color(n, 1) if row == 1 else vertical_color(n, n)
        edges += [(v(2 * b, row), v(2 * b + 1, row), link) for b in range(1, d)]
    for k in range(1, n + 1):
        edges += [(v(j, k), v(j, k + 1), vertical_color(n, k)) for j in (1, last)]
    for k in range(2, n + 1):
        edges += [(v(1, k), v(last, k), c) for c in horizontal_colors(n, k) + [n]]
    return _assemble(n, labels, edges)


_FAMILIES: Dict[str, Callable[..., Gem]] = {
    "sphere": standard_sphere,
    "necklace-sphere": necklace_sphere,
    "cylinder": cylinder_gem,
    "product-standard": product_standard,
    "product": product_gem,
    "glued-sphere": glued_sphere,
}

FAMILY_NAMES = tuple(_FAMILIES)


def family(name: str, n: int, d: Optional[int] = None) -> Gem:
    """Build a family member by its command-line name."""
    try:
        builder = _FAMILIES[name]
    except KeyError:
        raise BadParam(f"unknown family {name!r}; expected one of {FAMILY_NAMES}") from None
    if name in ("sphere", "product-standard"):
        return builder(n)
    _require(d is not None, f"family {name!r} needs --d")
    return builder(n, d)
