"""Shared context and gem-building steps for the BDD scenarios."""

import pytest
from pytest_bdd import given, parsers

from gem_degree.constructions import necklace_sphere, product_gem


@pytest.fixture
def context():
    """Shared context for BDD scenarios."""
    return {"gem": None, "map": None, "result": None}


@given(parsers.parse("the necklace sphere of dimension {n:d} with {d:d} pairs"))
def given_necklace_sphere(context, n, d):
    context["gem"] = necklace_sphere(n, d)


@given(parsers.parse("the product gem of dimension {n:d} and degree {d:d}"))
def given_product_gem(context, n, d):
    context["gem"] = product_gem(n, d)
