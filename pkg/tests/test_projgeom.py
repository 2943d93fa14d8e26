"""Tests for projective points, lines, polynomials and Hadamard products."""

from fractions import Fraction

import pytest

from src.hadamard.construction import line_L, lines_PQ, point_P, point_Q, system_matrix
from src.hadamard.errors import DegenerateInputError, DimensionError, DomainError, UndefinedProductError
from src.hadamard.projgeom import (
    Line3,
    LinearForm,
    Poly,
    ProjPoint,
    canonical_coords,
    contains,
    delta_index,
    eval_poly,
    hadamard_point,
    hadamard_transform,
    line_through,
    monomials,
    plane_through,
    sample_line_points,
    transform_line,
)


def _random_point(rng, nonzero=False):
    while True:
        coords = [rng.randint(-6, 6) for _ in range(4)]
        if nonzero and 0 in coords:
            continue
        if any(coords):
            return ProjPoint(tuple(coords))


class TestCanonicalForm:
    def test_clears_denominators_and_sign(self):
        assert ProjPoint.of("-1/2", 2, "-5/2", 1).coords == (1, -4, 5, -2)
        assert canonical_coords([0, -6, 4]) == (0, 3, -2)

    def test_scaling_gives_equal_points(self):
        assert ProjPoint.of(2, 4, 6, 8) == ProjPoint.of(1, 2, 3, 4)
        assert ProjPoint.of(-1, -2, -3, -4) == ProjPoint.of(1, 2, 3, 4)

    def test_idempotent(self, rng):
        for _ in range(20):
            p = _random_point(rng)
            assert ProjPoint(p.coords) == p
            assert canonical_coords(p.coords) == p.coords

    def test_zero_vector(self):
        with pytest.raises(DegenerateInputError):
            ProjPoint.of(0, 0, 0, 0)

    def test_str(self):
        assert str(ProjPoint.of(48, 54, 64, 75)) == "[48:54:64:75]"


class TestHadamardPoint:
    def test_product(self):
        p = ProjPoint.of(2, 3, 4, 5)
        q = ProjPoint.of(2, "3/2", "4/3", "5/4")
        assert hadamard_point(p, q) == ProjPoint.of(48, 54, 64, 75)
        assert hadamard_point(ProjPoint.of(1, 1, 1, 1), p) == p

    def test_undefined(self):
        with pytest.raises(UndefinedProductError):
            hadamard_point(ProjPoint.of(1, 0), ProjPoint.of(0, 1))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            hadamard_point(ProjPoint.of(1, 1), ProjPoint.of(1, 1, 1))

    def test_commutative_and_associative(self, rng):
        for _ in range(30):
            p, q, r = (_random_point(rng, nonzero=True) for _ in range(3))
            assert hadamard_point(p, q) == hadamard_point(q, p)
            assert hadamard_point(hadamard_point(p, q), r) == hadamard_point(p, hadamard_point(q, r))

    def test_injective_for_points_without_zeros(self, rng):
        for _ in range(30):
            p, q, r = (_random_point(rng, nonzero=True) for _ in range(3))
            assert (hadamard_point(p, q) == hadamard_point(p, r)) == (q == r)

    def test_delta_index(self):
        assert delta_index(ProjPoint.of(1, 0, 0, 0)) == 0
        assert delta_index(ProjPoint.of(1, 0, 2, 0)) == 1
        assert delta_index(ProjPoint.of(1, 1, 1, 1)) == 3


class TestPolynomials:
    def test_monomials_order(self):
        assert monomials(3, 1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        assert len(monomials(4, 3)) == 20
        assert monomials(2, 2) == ((2, 0), (1, 1), (0, 2))

    def test_product_and_str(self):
        product = Poly.linear([1, 1, 0, 0]) * Poly.linear([1, -1, 0, 0])
        assert str(product) == "x0^2-x1^2"
        assert product.degree == 2

    def test_canonical(self):
        poly = Poly.linear(["1/2", "-3/2", 0, 1])
        assert poly.canonical().coefficients() == {(1, 0, 0, 0): 1, (0, 1, 0, 0): -3, (0, 0, 0, 1): 2}

    def test_to_linear_form(self):
        assert Poly.linear([0, 2, -4, 2]).to_linear_form() == LinearForm.of(0, 1, -2, 1)
        with pytest.raises(DimensionError):
            (Poly.linear([1, 0]) * Poly.linear([1, 0])).to_linear_form()

    def test_inconsistent_exponents(self):
        with pytest.raises(DimensionError):
            Poly(2, 2, (((1, 0), 1),))

    def test_eval(self):
        assert eval_poly(Poly.linear([1, 1, 0, 0]), ProjPoint.of(1, -1, 0, 0)) == 0
        assert eval_poly(Poly.linear([1, 0, 0, 0]), ProjPoint.of(3, 1, 1, 1)) == 3


class TestHadamardTransform:
    def test_scales_coefficients(self):
        f = Poly.from_terms(4, {(1, 1, 0, 0): 1})
        g = hadamard_transform(f, ProjPoint.of(2, 1, 1, 1))
        assert g.coefficients() == {(1, 1, 0, 0): Fraction(1, 2)}

    def test_rational_coefficients_in_str(self):
        g = hadamard_transform(Poly.from_terms(4, {(1, 1, 0, 0): 1, (0, 0, 0, 2): -3}), ProjPoint.of(2, 1, 1, 2))
        assert str(g) == "1/2*x0*x1-3/4*x3^2"

    def test_sum_of_coordinates_gives_grid_line_form(self, default_config):
        p = hadamard_point(point_P(default_config, 2), point_Q(default_config, 2))
        assert p == ProjPoint.of(54, 60, 70, 81)
        form = hadamard_transform(Poly.linear([1, 1, 1, 1]), p).to_linear_form()
        assert form == LinearForm.of(210, 189, 162, 140)
        assert form == LinearForm(system_matrix(default_config, (2, 2), (0, 0)).row(0))

    def test_identity_point(self):
        f = Poly.linear([1, -6, 9, -4])
        assert hadamard_transform(f, ProjPoint.of(1, 1, 1, 1)) == f

    def test_zero_coordinate(self):
        with pytest.raises(DomainError):
            hadamard_transform(Poly.linear([1, 1, 1, 1]), ProjPoint.of(1, 0, 1, 1))

    def test_transformed_line_holds_products(self, default_config, rng):
        base = line_L(default_config)
        samples = sample_line_points(base, 6)
        for _ in range(20):
            p = _random_point(rng, nonzero=True)
            moved = transform_line(base, p)
            for q in samples:
                assert moved.contains(hadamard_point(p, q))

    def test_unit_point_fixes_line(self, default_config):
        base = line_L(default_config)
        assert transform_line(base, ProjPoint.of(1, 1, 1, 1)).coincides(base)


class TestLines:
    def test_line_through_coordinate_points(self):
        line = line_through(ProjPoint.of(1, 0, 0, 0), ProjPoint.of(0, 1, 0, 0))
        assert {line.form_a, line.form_b} == {LinearForm.of(0, 0, 1, 0), LinearForm.of(0, 0, 0, 1)}

    def test_same_point(self):
        p = ProjPoint.of(1, 2, 3, 4)
        with pytest.raises(DegenerateInputError):
            line_through(p, p)

    def test_dependent_forms(self):
        with pytest.raises(DegenerateInputError):
            Line3(LinearForm.of(1, 2, 3, 4), LinearForm.of(2, 4, 6, 8))

    def test_line_through_p0_p1_is_ell_p(self, default_config):
        ell_p, _ = lines_PQ(default_config)
        line = line_through(point_P(default_config, 0), point_P(default_config, 1))
        assert line.coincides(ell_p)

    def test_coincides_ignores_generators(self):
        first = Line3(LinearForm.of(1, -6, 9, -4), LinearForm.of(0, 1, -2, 1))
        second = Line3(LinearForm.of(2, -12, 18, -8), LinearForm.of(1, -5, 7, -3))
        assert first.coincides(second)

    def test_sample_points(self, default_config):
        line = line_L(default_config)
        assert sample_line_points(line, 0) == []
        points = sample_line_points(line, 7)
        assert len(set(points)) == 7
        assert all(contains(line, p) for p in points)

    def test_plane_through(self):
        plane = plane_through(ProjPoint.of(1, 0, 0, 0), ProjPoint.of(0, 1, 0, 0), ProjPoint.of(0, 0, 1, 0))
        assert plane == LinearForm.of(0, 0, 0, 1)

    def test_plane_through_collinear(self):
        with pytest.raises(DegenerateInputError):
            plane_through(ProjPoint.of(1, 0, 0, 0), ProjPoint.of(0, 1, 0, 0), ProjPoint.of(1, 1, 0, 0))

    def test_str(self):
        line = Line3(LinearForm.of(1, 1, 1, 1), LinearForm.of(1, 2, 3, 4))
        assert str(line) == "{x0+x1+x2+x3 = 0, x0+2*x1+3*x2+4*x3 = 0}"
