"""Vertex maps between gems and the degree of the simplicial maps they induce.

A vertex map g: Γ₁ -> Γ₂ induces a simplicial map f: K(Γ₁) -> K(Γ₂) when the
ends of every color-i edge land on one vertex or on the ends of a color-i
edge. With orientations given by sign alternation, d_f is sign(v) times the
algebraic number of g⁻¹(v), for any target vertex v.
"""

from typing import Dict, Iterable, List, Tuple

from loguru import logger

from .constructions import product_gem, product_standard, standard_sphere
from .errors import (
    BadParam,
    InconsistentDegree,
    InvalidMap,
    Mismatch,
    UnknownVertex,
    UnsupportedTarget,
)
from .gem_core import color_isomorphic, orientation, require_closed
from .models import ColoredVertexMap, DegreeResult, Gem, Orientation, v
from .moves import enlarge_by_dipoles
from .types import EdgeViolation

_ROOT_LABEL = v(1, 1)


def identity_map(gem: Gem) -> ColoredVertexMap:
    return ColoredVertexMap(
        source=gem, target=gem, assignment=tuple(range(gem.vertex_count))
    )


def constant_map(source: Gem, target: Gem, vertex: int = 0) -> ColoredVertexMap:
    """Every source vertex to ``vertex``; induces a degree-0 map."""
    return ColoredVertexMap(
        source=source, target=target, assignment=(vertex,) * source.vertex_count
    )


def validate_map(m: ColoredVertexMap) -> List[EdgeViolation]:
    """Every source edge whose image is neither collapsed nor a same-colored edge."""
    violations: List[EdgeViolation] = []
    for a, b, color in m.source.edges:
        x, y = m(a), m(b)
        if x == y or m.target.neighbor(x, color) == y:
            continue
        violations.append({"edge": (a, b, color), "image": (x, y)})
    if violations:
        logger.debug(f"map violates the edge contract on {len(violations)} edges")
    return violations


def algebraic_number(o: Orientation, vertices: Iterable[int]) -> int:
    """Σ sign(v) over ``vertices``."""
    total = 0
    for vertex in vertices:
        if not (0 <= vertex < len(o.signs)):
            raise UnknownVertex(f"vertex {vertex} is not oriented")
        total += o.sign(vertex)
    return total


def canonical_orientation(gem: Gem) -> Orientation:
    """Signs with the least-id vertex labelled v_1^1 (else vertex 0) positive."""
    root = gem.labels.index(_ROOT_LABEL) if _ROOT_LABEL in gem.labels else 0
    return orientation(gem, root)


def degree(
    m: ColoredVertexMap,
    source_orientation: Orientation,
    target_orientation: Orientation,
) -> DegreeResult:
    """d_f of the simplicial map induced by ``m``.

    Raises:
        InvalidMap: the edge contract fails.
        NotClosed: either gem has boundary.
        InconsistentDegree: the per-target values disagree.
    """
    violations = validate_map(m)
    if violations:
        first = violations[0]
        raise InvalidMap(
            f"{len(violations)} edges break the edge contract, first "
            f"{first['edge']} -> {first['image']}",
            f"edge {first['edge']}",
        )
    require_closed(m.source)
    require_closed(m.target)
    if len(source_orientation.signs) != m.source.vertex_count:
        raise Mismatch("source orientation does not match the source gem")
    if len(target_orientation.signs) != m.target.vertex_count:
        raise Mismatch("target orientation does not match the target gem")

    preimages: Dict[int, List[int]] = {t: [] for t in range(m.target.vertex_count)}
    for vertex, image in enumerate(m.assignment):
        preimages[image].append(vertex)
    per_target = {
        t: target_orientation.sign(t) * algebraic_number(source_orientation, vertices)
        for t, vertices in preimages.items()
    }

    if not m.is_surjective():
        logger.warning("map is not surjective; its degree is 0")
        return DegreeResult(degree=0, surjective=False, per_target=per_target)
    values = set(per_target.values())
    if len(values) != 1:
        raise InconsistentDegree(f"per-target signed counts disagree: {per_target}")
    return DegreeResult(degree=values.pop(), surjective=True, per_target=per_target)


def map_degree(m: ColoredVertexMap) -> DegreeResult:
    """degree() with canonical orientations on both gems."""
    return degree(m, canonical_orientation(m.source), canonical_orientation(m.target))


def compose(outer: ColoredVertexMap, inner: ColoredVertexMap) -> ColoredVertexMap:
    """outer ∘ inner."""
    if inner.target != outer.source:
        raise Mismatch("inner target and outer source are different gems")
    return ColoredVertexMap(
        source=inner.source,
        target=outer.target,
        assignment=tuple(outer(image) for image in inner.assignment),
    )


def build_sphere_map(source: Gem, d: int) -> ColoredVertexMap:
    """g_d: ``source`` -> standard_sphere(n) inducing degree d (0 <= d <= V/2).

    d < V/2: the first d negative vertices go to v^2, the rest to v^1.
    d = V/2: positives to v^1, negatives to v^2. Larger d needs a source
    enlarged by n-dipoles first (see sphere_map_of_degree).
    """
    require_closed(source)
    p = source.vertex_count // 2
    if d < 0:
        raise BadParam(f"build_sphere_map needs d >= 0, got {d}")
    if d > p:
        raise BadParam(
            f"degree {d} needs at least {2 * d} source vertices, got "
            f"{source.vertex_count}; enlarge the source by {d - p} n-dipoles",
        )
    signs = canonical_orientation(source)
    if d == p:
        assignment = tuple(0 if s > 0 else 1 for s in signs.signs)
    else:
        chosen = set(signs.negatives()[:d])
        assignment = tuple(1 if i in chosen else 0 for i in range(source.vertex_count))
    return ColoredVertexMap(
        source=source, target=standard_sphere(source.dimension), assignment=assignment
    )


def _reversal_on(target: Gem, model: Gem, swap: Dict[int, int]) -> ColoredVertexMap:
    if target == model:
        phi = {i: i for i in range(target.vertex_count)}
    else:
        phi = color_isomorphic(model, target)
    if phi is None:
        raise UnsupportedTarget("target is not color-isomorphic to a supported model")
    inverse = {b: a for a, b in phi.items()}
    assignment = tuple(phi[swap[inverse[t]]] for t in range(target.vertex_count))
    return ColoredVertexMap(source=target, target=target, assignment=assignment)


def orientation_reversal(target: Gem) -> ColoredVertexMap:
    """The column-swapping self-map g' of standard_sphere(n) or product_standard(n).

    Raises:
        UnsupportedTarget: ``target`` is (up to colors) neither of the two.
    """
    n = target.dimension
    if target.vertex_count == 2:
        return _reversal_on(target, standard_sphere(n), {0: 1, 1: 0})
    if n >= 2 and target.vertex_count == 2 * (n + 1):
        model = product_standard(n)
        swap = {}
        for k in range(1, n + 2):
            a, b = model.vertex_by_label(v(1, k)), model.vertex_by_label(v(2, k))
            swap[a], swap[b] = b, a
        return _reversal_on(target, model, swap)
    raise UnsupportedTarget(
        f"no orientation reversal for a {target.vertex_count}-vertex gem of dimension {n}"
    )


def sphere_map_of_degree(source: Gem, d: int) -> ColoredVertexMap:
    """A map from ``source`` (enlarged by n-dipoles as needed) to Sⁿ of degree d."""
    if d < 0:
        inner = sphere_map_of_degree(source, -d)
        return compose(orientation_reversal(inner.target), inner)
    missing = d - source.vertex_count // 2
    if missing > 0:
        logger.info(f"enlarging source by {missing} n-dipoles for degree {d}")
        source = enlarge_by_dipoles(source, missing)
    return build_sphere_map(source, d)


def build_g_d_product(n: int, d: int) -> ColoredVertexMap:
    """g_d: product_gem(n, d) -> product_standard(n), v_{2j-1}^k -> v_1^k, v_{2j}^k -> v_2^k."""
    source, target = product_gem(n, d), product_standard(n)
    assignment = []
    for label in source.labels:
        column = 1 if label.series % 2 == 1 else 2  # type: ignore[operator]
        assignment.append(target.vertex_by_label(v(column, label.level)))
    return ColoredVertexMap(source=source, target=target, assignment=tuple(assignment))


def product_map_of_degree(n: int, d: int) -> ColoredVertexMap:
    """A self-map of Sⁿ⁻¹×S¹ of degree d for any integer d."""
    if d == 0:
        target = product_standard(n)
        return constant_map(target, target)
    if d > 0:
        return build_g_d_product(n, d)
    inner = build_g_d_product(n, -d)
    return compose(orientation_reversal(inner.target), inner)


def facet_counts(m: ColoredVertexMap) -> Tuple[int, int]:
    """(facets of K(source), facets of K(target)): one n-simplex per gem vertex."""
    return m.source.vertex_count, m.target.vertex_count
