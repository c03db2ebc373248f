"""BDD step definitions for cylinder reduction and boundary scenarios."""

from pytest_bdd import scenarios, given, when, then, parsers

from gem_degree.constructions import (
    boundary_necklace,
    cylinder_gem,
    product_standard,
)
from gem_degree.gem_core import (
    boundary_graph,
    color_isomorphic,
    disjoint_union,
    residue_count,
)
from gem_degree.moves import reduce_cylinder


scenarios("../features/cylinder_reduction.feature")


@given(parsers.parse("the cylinder gem of dimension {n:d} and degree {d:d}"))
def given_cylinder(context, n, d):
    context["gem"] = cylinder_gem(n, d)
    context["n"], context["d"] = n, d


@when("the cylinder is reduced")
def when_reduced(context):
    context["result"], context["log"] = reduce_cylinder(context["gem"])


@when("its boundary graph is taken")
def when_boundary(context):
    context["result"] = boundary_graph(context["gem"])


@then(
    parsers.parse(
        "the log holds {glues:d} glue moves followed by {dipoles:d} dipole cancellations"
    )
)
def then_log(context, glues, dipoles):
    kinds = [entry["kind"] for entry in context["log"]]
    assert kinds == ["glue"] * glues + ["cancel_dipole"] * dipoles


@then("the reduced gem is color-isomorphic to the degree-1 cylinder gem")
def then_reduced(context):
    assert color_isomorphic(context["result"], cylinder_gem(context["n"], 1)) is not None


@then(parsers.parse("the boundary has {count:d} components"))
def then_components(context, count):
    boundary = context["result"]
    assert residue_count(boundary, boundary.colors) == count


@then("the boundary is color-isomorphic to the two boundary necklaces")
def then_necklaces(context):
    n, d = context["n"], context["d"]
    expected = disjoint_union(
        boundary_necklace(n, d, 1), boundary_necklace(n, d, n + 1), n - 1
    )
    assert color_isomorphic(context["result"], expected) is not None


@then(parsers.parse("it is color-isomorphic to product_standard({n:d})"))
def then_product_standard(context, n):
    assert color_isomorphic(context["gem"], product_standard(n)) is not None
