"""BDD step definitions for facet count, Euler characteristic and genus scenarios."""

from pytest_bdd import scenarios, given, then, parsers

from gem_degree.complex import euler_characteristic
from gem_degree.constructions import product_standard
from gem_degree.genus import regular_genus


scenarios("../features/gem_invariants.feature")


@given(parsers.parse("the standard product of dimension {n:d}"))
def given_standard_product(context, n):
    context["gem"] = product_standard(n)


@then(parsers.parse("it has {vertices:d} vertices"))
def then_vertices(context, vertices):
    assert context["gem"].vertex_count == vertices


@then(parsers.parse("its Euler characteristic is {euler:d}"))
def then_euler(context, euler):
    assert euler_characteristic(context["gem"]) == euler


@then(parsers.parse("its regular genus is {genus:d}"))
def then_genus(context, genus):
    context["result"] = regular_genus(context["gem"])
    assert context["result"].regular_genus == genus


@then(parsers.parse("the scan covered {permutations:d} permutations"))
def then_scan(context, permutations):
    assert len(context["result"].per_permutation) == permutations
