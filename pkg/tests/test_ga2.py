"""Tests for the plane algebra G2."""

import math

import numpy as np
import pytest
from hypothesis import assume, given

from moving_planes.config import get_settings
from moving_planes.core import ga2
from moving_planes.core.exceptions import ScalarPartError, ValidationError
from moving_planes.core.models import G2Multivector, UnitVector2, Vector2, ZeroScalarClass
from tests.strategies import g2_multivectors, rapidities, unit_vectors, zero_scalars


class TestProducts:
    def test_e1_e2_is_i(self):
        assert (ga2.E1 * ga2.E2).isclose(ga2.I, 0.0)
        assert (ga2.E2 * ga2.E1).isclose(-ga2.I, 0.0)

    def test_i_squared(self):
        assert (ga2.I * ga2.I).isclose(-ga2.ONE, 0.0)

    def test_sym_and_antisym_of_vectors(self):
        a = G2Multivector(v1=1.0, v2=2.0)
        b = G2Multivector(v1=3.0, v2=-1.0)
        assert ga2.sym(a, b).isclose(G2Multivector(s=1.0), 1e-15)
        assert ga2.antisym(a, b).isclose(G2Multivector(b=-7.0), 1e-15)

    def test_inner_and_outer(self):
        a, b = Vector2(v1=1.0, v2=2.0), Vector2(v1=3.0, v2=-1.0)
        assert ga2.inner_vec(a, b) == 1.0
        assert ga2.outer_vec(a, b) == -7.0

    @given(g2_multivectors(), g2_multivectors(), g2_multivectors())
    def test_associativity(self, a, b, c):
        scale = max(1.0, a.max_abs() * b.max_abs() * c.max_abs())
        assert ((a * b) * c).max_abs_diff(a * (b * c)) <= 1e-12 * scale

    @given(g2_multivectors(), g2_multivectors())
    def test_sym_plus_antisym_is_gp(self, a, b):
        scale = max(1.0, a.max_abs() * b.max_abs())
        assert (ga2.sym(a, b) + ga2.antisym(a, b)).max_abs_diff(ga2.gp(a, b)) <= 1e-14 * scale


class TestGrades:
    def test_grade_projections(self):
        g = G2Multivector(s=1.0, v1=2.0, v2=3.0, b=4.0)
        assert ga2.grade(g, 0) == G2Multivector(s=1.0)
        assert ga2.grade(g, 1) == G2Multivector(v1=2.0, v2=3.0)
        assert ga2.grade(g, 2) == G2Multivector(b=4.0)
        assert ga2.scalar_part(g) == 1.0
        assert ga2.vector_part(g) == Vector2(v1=2.0, v2=3.0)
        assert ga2.bivector_part(g) == 4.0

    def test_invalid_grade(self):
        with pytest.raises(ValidationError):
            ga2.grade(ga2.ONE, 3)

    def test_reverse_and_conjugate(self):
        g = G2Multivector(s=1.0, v1=2.0, v2=3.0, b=4.0)
        assert ga2.reverse(g) == G2Multivector(s=1.0, v1=2.0, v2=3.0, b=-4.0)
        assert ga2.conjugate(g) == G2Multivector(s=1.0, v1=-2.0, v2=-3.0, b=-4.0)

    @given(g2_multivectors())
    def test_conjugate_gives_determinant(self, g):
        norm = g * ga2.conjugate(g)
        expected = g.s ** 2 - g.v1 ** 2 - g.v2 ** 2 + g.b ** 2
        scale = max(1.0, g.max_abs() ** 2)
        assert norm.max_abs_diff(G2Multivector(s=expected)) <= 1e-12 * scale


class TestZeroScalar:
    def test_sym_zero_scalar(self):
        a = G2Multivector(v1=1.0, v2=2.0, b=3.0)
        b = G2Multivector(v1=4.0, v2=5.0, b=6.0)
        assert ga2.sym_zero_scalar(a, b) == pytest.approx(1 * 4 + 2 * 5 - 3 * 6)
        assert ga2.sym(a, b).isclose(G2Multivector(s=-4.0), 1e-12)

    def test_antisym_zero_scalar_matches_product(self):
        a = G2Multivector(v1=1.0, v2=2.0, b=3.0)
        b = G2Multivector(v1=4.0, v2=5.0, b=6.0)
        assert ga2.antisym_zero_scalar(a, b).isclose(ga2.antisym(a, b), 1e-12)

    def test_triple_of_basis(self):
        assert ga2.triple_sym(ga2.E1, ga2.E2, ga2.I) == pytest.approx(-1.0)

    def test_rejects_scalar_part(self):
        with pytest.raises(ScalarPartError):
            ga2.triple_sym(ga2.ONE, ga2.E2, ga2.I)

    @given(zero_scalars(), zero_scalars(), zero_scalars())
    def test_triple_is_minus_determinant(self, a, b, c):
        rows = np.array([[x.v1, x.v2, x.b] for x in (a, b, c)])
        assert ga2.triple_sym(a, b, c) == pytest.approx(-np.linalg.det(rows), abs=1e-9)

    @pytest.mark.parametrize(
        "element, expected",
        [
            (G2Multivector(v1=1.0), ZeroScalarClass.RELATIVE_VECTOR),
            (G2Multivector(v1=1.0, b=1.0), ZeroScalarClass.NILPOTENT),
            (G2Multivector(b=1.0), ZeroScalarClass.RELATIVE_BIVECTOR),
            (G2Multivector(v1=1.0, b=2.0), ZeroScalarClass.RELATIVE_BIVECTOR),
        ],
    )
    def test_classify(self, element, expected):
        assert ga2.classify_zero_scalar(element) is expected

    def test_classify_rejects_scalar_part(self):
        with pytest.raises(ScalarPartError):
            ga2.classify_zero_scalar(G2Multivector(s=1.0, v1=1.0))

    @given(unit_vectors(), rapidities(5.0))
    def test_nilpotents_square_to_zero(self, a, r):
        assume(abs(r) > 1e-3)
        element = G2Multivector(v1=r * a.v1, v2=r * a.v2, b=r)
        assert (element * element).max_abs() <= 1e-12 * max(1.0, r * r)
        assert ga2.classify_zero_scalar(element) is ZeroScalarClass.NILPOTENT


class TestExponentials:
    def test_exp_of_nilpotent(self):
        n = G2Multivector(v1=1.0, b=1.0)
        assert ga2.exp_zero_scalar(n) == ga2.ONE + n

    def test_exp_of_bivector(self):
        assert ga2.exp_zero_scalar(G2Multivector(b=math.pi / 2)).isclose(ga2.I, 1e-15)

    def test_exp_of_relative_vector(self):
        a = UnitVector2(v1=0.6, v2=0.8)
        result = ga2.exp_zero_scalar(G2Multivector(v1=0.6 * 2.0, v2=0.8 * 2.0))
        assert result.isclose(ga2.vector_exp(a, 2.0), 1e-14)

    def test_exp_near_zero_uses_series_guard(self):
        tiny = G2Multivector(v1=1e-9)
        assert ga2.exp_zero_scalar(tiny, tol=1e-30).isclose(ga2.ONE + tiny, 1e-15)

    def test_exp_of_small_bivector_below_default_tolerance(self):
        tiny = G2Multivector(b=1e-7)
        assert ga2.classify_zero_scalar(tiny) is ZeroScalarClass.NILPOTENT
        result = ga2.exp_zero_scalar(tiny, tol=1e-20)
        assert result.isclose(ga2.exp_series(tiny), 1e-15)
        assert result.b == pytest.approx(1e-7 - 1e-21 / 6.0, rel=1e-15)

    @pytest.mark.parametrize("hyperbolic", [True, False])
    def test_sinc_branches_meet_at_the_threshold(self, hyperbolic):
        x = 0.999 * get_settings().taylor_threshold
        exact = (math.sinh(x) if hyperbolic else math.sin(x)) / x
        assert ga2._sinc_like(x, hyperbolic) == pytest.approx(exact, rel=1e-15)

    def test_general_exp_factors_the_scalar(self):
        g = G2Multivector(s=1.0, b=math.pi)
        assert ga2.exp(g).isclose(G2Multivector(s=-math.e), 1e-14)

    @given(zero_scalars(2.0))
    def test_matches_power_series(self, a):
        exact = ga2.exp_zero_scalar(a)
        assert exact.max_abs_diff(ga2.exp_series(a)) <= 1e-9 * max(1.0, exact.max_abs())

    @given(unit_vectors(), rapidities())
    def test_vector_exp_inverse(self, a, phi):
        product = ga2.vector_exp(a, phi) * ga2.vector_exp(a, -phi)
        assert product.max_abs_diff(ga2.ONE) <= 1e-12 * math.cosh(phi) ** 2

    def test_bivector_exp(self):
        assert ga2.bivector_exp(math.pi).isclose(-ga2.ONE, 1e-15)
