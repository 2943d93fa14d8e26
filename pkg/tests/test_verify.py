"""Tests for Hilbert functions, stick-figure checks and Hadamard products of coplanar lines."""

from math import comb, prod

import pytest

from src.enums import ValidationCode
from src.hadamard.construction import AConfig, StickFigure, build_Z, lines_PQ, stick_figure, validate_config
from src.hadamard.errors import InvariantViolation, ValidationError
from src.hadamard.exactq import QMatrix, kernel_basis
from src.hadamard.gorenstein import gorenstein_points
from src.hadamard.hvector import make_profile
from src.hadamard.projgeom import LinearForm, Poly, ProjPoint, line_through, monomials
from src.hadamard.verify import (
    PointSet,
    check_gorenstein,
    check_stick_figure,
    coplanar_product_samples,
    h_vector_of,
    hilbert_function,
    vanishes_on,
)

QUADRIC_TERMS = {
    (2, 0, 0, 0): 1120,
    (1, 1, 0, 0): -68,
    (0, 2, 0, 0): 1,
    (1, 0, 1, 0): 1056,
    (0, 1, 1, 0): -30,
    (0, 0, 2, 0): 216,
    (1, 0, 0, 1): -3500,
    (0, 1, 0, 1): 110,
    (0, 0, 1, 1): -1530,
    (0, 0, 0, 2): 2625,
}


class TestPointSet:
    def test_rejects_repeats(self):
        with pytest.raises(ValidationError) as info:
            PointSet((ProjPoint.of(1, 2, 3, 4), ProjPoint.of(2, 4, 6, 8)))
        assert info.value.code is ValidationCode.POINTS_NOT_DISTINCT
        assert info.value.index == 1

    def test_rejects_empty_and_mixed(self):
        with pytest.raises(ValidationError):
            PointSet(())
        with pytest.raises(ValidationError):
            PointSet((ProjPoint.of(1, 2), ProjPoint.of(1, 2, 3)))


class TestHilbertFunction:
    def test_single_point(self):
        ps = PointSet((ProjPoint.of(1, 2, 3, 4),))
        assert [hilbert_function(ps, d) for d in range(4)] == [1, 1, 1, 1]
        report = h_vector_of(ps)
        assert report.h_vector == (1,)
        assert report.stabilized_at == 0

    def test_reference_set(self, reference_points):
        ps = PointSet(tuple(reference_points))
        assert [hilbert_function(ps, d) for d in range(5)] == [1, 4, 8, 11, 12]
        report = h_vector_of(ps)
        assert report.h_vector == (1, 3, 4, 3, 1)
        assert report.stabilized_at == 4
        assert report.values == ((0, 1), (1, 4), (2, 8), (3, 11), (4, 12))

    def test_collinear_points(self):
        ps = PointSet((ProjPoint.of(1, 0, 0, 0), ProjPoint.of(0, 1, 0, 0), ProjPoint.of(1, 1, 0, 0)))
        assert h_vector_of(ps).h_vector == (1, 1, 1)

    def test_planar_complete_intersection(self, default_config):
        assert h_vector_of(PointSet(tuple(build_Z(default_config, 2, 2)))).h_vector == (1, 2, 1)
        assert h_vector_of(PointSet(tuple(build_Z(default_config, 3, 4)))).h_vector == (1, 2, 3, 3, 2, 1)

    @staticmethod
    def _forms_through(points, d):
        exponents = monomials(4, d)
        rows = [[prod(x**e for x, e in zip(p.coords, exponent)) for exponent in exponents] for p in points]
        matrix = QMatrix.from_rows(rows)
        return [Poly.from_terms(4, dict(zip(exponents, vector))) for vector in kernel_basis(matrix)]

    def _assert_rank_nullity(self, points, top):
        ps = PointSet(tuple(points))
        for d in range(top + 1):
            forms = self._forms_through(points, d)
            assert hilbert_function(ps, d) + len(forms) == comb(d + 3, 3)
            assert all(vanishes_on(f, points) for f in forms)

    def test_rank_nullity_on_reference_set(self, reference_points):
        self._assert_rank_nullity(reference_points, 5)

    def test_rank_nullity_on_planar_set(self, config_factory):
        self._assert_rank_nullity(build_Z(config_factory(3, 4), 3, 4), 5)

    def test_negative_degree(self, reference_points):
        assert hilbert_function(PointSet(tuple(reference_points)), -1) == 0

    def test_cap_too_low(self, reference_points):
        with pytest.raises(InvariantViolation):
            h_vector_of(PointSet(tuple(reference_points)), degree_cap=2)


class TestStickFigureCheck:
    def test_default_grid_passes(self, default_config):
        report = check_stick_figure(stick_figure(default_config, 3, 4))
        assert report.passed
        assert report.pairs_checked == 66
        assert len(report.meets) == 30
        assert report.meets[(0, 0), (0, 2)] == ProjPoint.of(1, -4, 5, -2)

    def test_single_line(self, default_config):
        report = check_stick_figure(stick_figure(default_config, 1, 1))
        assert report.passed
        assert report.pairs_checked == 0

    def test_repeated_line_fails(self, default_config):
        figure = stick_figure(default_config, 3, 4)
        lines = dict(figure.lines)
        lines[0, 2] = lines[0, 0]
        broken = StickFigure(figure.config, figure.rows, figure.columns, lines)
        report = check_stick_figure(broken)
        assert not report.passed
        assert report.offending == ((0, 0), (0, 2))
        assert "coincide" in report.failure

    def test_large_random_grids(self, config_factory):
        for rows, columns in ((8, 9), (5, 7), (6, 3)):
            report = check_stick_figure(stick_figure(config_factory(rows, columns, 6), rows, columns))
            assert report.passed, report.failure
            assert report.pairs_checked == rows * columns * (rows * columns - 1) // 2
            assert len(report.meets) == rows * columns * (rows + columns - 2) // 2


class TestCoplanarProducts:
    def test_quadric_from_two_lines(self):
        s1, s2, s3 = ProjPoint.of(1, 1, 1, 1), ProjPoint.of(3, "3/2", 5, "7/2"), ProjPoint.of("3/2", 3, "4/3", "7/5")
        products = coplanar_product_samples(line_through(s1, s2), line_through(s1, s3), 4, 5)
        assert len(products) == 20
        quadric = Poly.from_terms(4, QUADRIC_TERMS)
        assert vanishes_on(quadric, products)
        assert vanishes_on(quadric, [ProjPoint.of(1, 1, 1, 1)])

    def test_plane_from_the_point_lines(self):
        cfg = validate_config(["1/2", "2/1", "1/3", "2/5"], [0], [0])
        ell_p, ell_q = lines_PQ(cfg)
        products = coplanar_product_samples(ell_p, ell_q, 4, 5)
        assert len(products) == 20
        assert vanishes_on(LinearForm.of(40, -1, 36, -75).to_poly(), products)

    def test_vanishes_on_false(self):
        x0 = Poly.linear([1, 0, 0, 0])
        assert vanishes_on(x0, [ProjPoint.of(0, 1, 1, 1)])
        assert not vanishes_on(x0, [ProjPoint.of(0, 1, 1, 1), ProjPoint.of(1, 1, 1, 1)])

    def test_undefined_products_skipped(self):
        first = line_through(ProjPoint.of(1, 0, 0, 0), ProjPoint.of(0, 1, 0, 0))
        second = line_through(ProjPoint.of(0, 0, 1, 0), ProjPoint.of(0, 0, 0, 1))
        assert coplanar_product_samples(first, second, 3, 3) == []


class TestGorensteinCheck:
    def test_reference_set(self, profile_13431, default_config):
        check = check_gorenstein(gorenstein_points(profile_13431, default_config), default_config)
        assert check.passed
        assert check.h_vector == (1, 3, 4, 3, 1)
        assert check.incidence

    def test_smallest_profile(self):
        cfg = AConfig.default(2, 3)
        check = check_gorenstein(gorenstein_points(make_profile((1, 3, 1)), cfg), cfg)
        assert check.passed
        assert (check.count, check.expected_count) == (5, 5)

    def test_random_profiles(self, si_vector_factory, config_factory):
        for _ in range(50):
            profile = make_profile(si_vector_factory())
            cfg = config_factory(profile.rows, profile.columns)
            result = gorenstein_points(profile, cfg)
            check = check_gorenstein(result, cfg)
            assert check.passed, (profile.h, cfg)
            assert check.h_vector == profile.h.entries
