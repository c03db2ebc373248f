"""Tests for bicolored cycle counts, χ_ε, ρ_ε and the regular genus scan."""

from fractions import Fraction
from math import factorial

import pytest

from gem_degree.constructions import (
    cylinder_gem,
    glued_sphere,
    necklace_sphere,
    product_gem,
    product_standard,
    standard_sphere,
)
from gem_degree.errors import BadColor, BadParam, NotClosed
from gem_degree.gem_core import new_gem
from gem_degree.genus import (
    bicolored_cycle_count,
    canonical_permutations,
    certify_sphere,
    chi,
    regular_genus,
    rho,
)
from gem_degree.models import CyclicPermutation
from tests.helpers import reversed_ids


class TestCyclicPermutation:
    def test_rotation_and_reversal_are_normalised(self):
        assert CyclicPermutation.canonical([2, 3, 0, 1]).order == (0, 1, 2, 3)
        assert CyclicPermutation.canonical([0, 3, 2, 1]).order == (0, 1, 2, 3)

    def test_not_a_permutation(self):
        with pytest.raises(BadParam):
            CyclicPermutation.canonical([0, 2, 2])

    def test_pairs_wrap_around(self):
        eps = CyclicPermutation.canonical([0, 1, 2])
        assert eps.pairs() == [(0, 1), (1, 2), (2, 0)]
        assert eps.dimension == 2


class TestCanonicalPermutations:
    @pytest.mark.parametrize("n", range(2, 7))
    def test_count(self, n):
        assert len(list(canonical_permutations(n))) == factorial(n) // 2

    def test_dimension_one(self):
        assert [eps.order for eps in canonical_permutations(1)] == [(0, 1)]

    def test_lexicographic(self):
        orders = [eps.order for eps in canonical_permutations(3)]
        assert orders == [(0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 1, 3)]


class TestChi:
    def test_product_standard_three(self, product3):
        assert bicolored_cycle_count(product3, 0, 3) == 2
        assert chi(product3, [0, 1, 2, 3]) == 0
        assert rho(product3, [0, 1, 2, 3]) == 1

    def test_independent_of_rotation_and_reversal(self, product4):
        values = {
            chi(product4, order)
            for order in ([0, 2, 4, 1, 3], [2, 4, 1, 3, 0], [3, 1, 4, 2, 0])
        }
        assert len(values) == 1

    def test_rho_is_exact(self):
        # V = 2 gives χ = 2 for every ε on the standard sphere
        assert rho(standard_sphere(3), [0, 2, 1, 3]) == Fraction(0)

    def test_same_color_twice(self, product3):
        with pytest.raises(BadColor):
            bicolored_cycle_count(product3, 1, 1)

    def test_open_gem(self):
        with pytest.raises(NotClosed):
            chi(cylinder_gem(3, 1), [0, 1, 2, 3])

    def test_wrong_permutation_length(self, product3):
        with pytest.raises(BadParam):
            chi(product3, [0, 1, 2])

    def test_dimension_one_cycle(self):
        # a hexagon alternating colors 0 and 1 is a gem of the circle
        gem = new_gem(
            1,
            ["a", "b", "c", "d", "e", "f"],
            [(0, 1, 0), (2, 3, 0), (4, 5, 0), (1, 2, 1), (3, 4, 1), (5, 0, 1)],
        )
        assert chi(gem, [0, 1]) == 2
        assert regular_genus(gem).regular_genus == 0


class TestRegularGenus:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_standard_sphere(self, n):
        assert regular_genus(standard_sphere(n)).regular_genus == 0

    @pytest.mark.parametrize("n", range(2, 7))
    def test_product_standard_is_one(self, n):
        report = regular_genus(product_standard(n))
        assert report.regular_genus == 1
        assert len(report.per_permutation) == factorial(n) // 2

    @pytest.mark.parametrize("n,d", [(2, 3), (3, 1), (4, 4), (5, 2)])
    def test_spheres_have_genus_zero(self, n, d):
        assert regular_genus(necklace_sphere(n, d)).regular_genus == 0
        assert regular_genus(glued_sphere(n, d)).regular_genus == 0

    def test_workers_do_not_change_the_result(self):
        gem = product_standard(5)
        assert regular_genus(gem, workers=4) == regular_genus(gem)

    def test_argmin_is_least_minimiser(self, product3):
        report = regular_genus(product3)
        assert report.argmin.order == (0, 1, 2, 3)

    def test_report_serialises_fractions(self, product3):
        dumped = regular_genus(product3).model_dump(mode="json")
        assert dumped["regular_genus"] == "1"
        assert dumped["per_permutation"]["0,1,2,3"] == {"chi": 0, "rho": "1"}

    @pytest.mark.parametrize(
        "gem", [product_standard(4), product_gem(3, 2), necklace_sphere(4, 3), glued_sphere(3, 2)]
    )
    def test_invariant_under_relabelling(self, gem):
        relabelled = reversed_ids(gem)
        assert regular_genus(relabelled) == regular_genus(gem)
        for epsilon in canonical_permutations(gem.dimension):
            assert chi(relabelled, epsilon) == chi(gem, epsilon)


class TestCycleCountFormulas:
    """Closed forms for the bicolored cycles of the glued sphere."""

    @pytest.mark.parametrize("n", range(3, 7))
    @pytest.mark.parametrize("d", range(1, 6))
    def test_closed_forms(self, n, d):
        gem = glued_sphere(n, d)
        g = lambda i, j: bicolored_cycle_count(gem, i, j)  # noqa: E731
        for i in range(n - 2):
            assert g(i, n) == 1
            assert g(i, n - 2) == d + 1
            assert g(i, n - 1) == d + 1
            for j in range(i + 1, n - 2):
                assert g(i, j) == 2 * d
        assert g(n - 2, n - 1) == 2
        assert g(n - 1, n) == d
        assert g(n - 2, n) == d

    @pytest.mark.parametrize("n", range(3, 7))
    @pytest.mark.parametrize("d", range(1, 6))
    def test_sphere_permutation(self, n, d):
        eps = list(range(n - 2)) + [n - 1, n, n - 2]
        assert rho(glued_sphere(n, d), eps) == 0


class TestCertifySphere:
    @pytest.mark.parametrize("n,d", [(3, 1), (3, 4), (4, 2), (5, 3), (6, 1)])
    def test_glued_sphere_hereditary(self, n, d):
        certificate = certify_sphere(glued_sphere(n, d))
        assert certificate
        assert certificate.hereditary_certificate

    def test_product_is_not_a_sphere(self, product3):
        certificate = certify_sphere(product3)
        assert not certificate
        assert certificate.regular_genus == 1
        assert not certificate.hereditary_certificate
