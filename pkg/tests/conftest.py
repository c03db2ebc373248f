"""Pytest fixtures for the gem_degree tests."""

import pytest

from gem_degree.constructions import (
    cylinder_gem,
    glued_sphere,
    necklace_sphere,
    product_gem,
    product_standard,
    standard_sphere,
)
from gem_degree.models import v


@pytest.fixture
def sphere2():
    """standard_sphere(2): 2 vertices, 3 parallel edges."""
    return standard_sphere(2)


@pytest.fixture
def necklace_3_2():
    return necklace_sphere(3, 2)


@pytest.fixture
def cylinder_3_2():
    return cylinder_gem(3, 2)


@pytest.fixture
def product3():
    """product_standard(3): the 8-vertex crystallization of S²×S¹."""
    return product_standard(3)


@pytest.fixture
def product4():
    return product_standard(4)


@pytest.fixture
def product_3_4():
    """product_gem(3, 4): the 32-vertex degree-4 gem."""
    return product_gem(3, 4)


@pytest.fixture
def glued_4_2():
    return glued_sphere(4, 2)


@pytest.fixture
def root_label():
    return v(1, 1)
