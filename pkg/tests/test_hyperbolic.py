"""Tests for hyperbolic numbers and their Euler forms."""

import math

import pytest
from hypothesis import assume, given

from moving_planes.core.exceptions import NullConeError
from moving_planes.core.hyperbolic import (
    from_polar,
    hconj,
    hdistance,
    hmodulus_sq,
    hmul,
    on_null_cone,
    polar,
    polar_product,
)
from moving_planes.core.models import HyperbolicBranch, HyperbolicNumber, HyperbolicPolar
from tests.strategies import hyperbolic_numbers


def off_null(w: HyperbolicNumber) -> bool:
    return abs(w.x * w.x - w.y * w.y) > 0.05 * (w.x * w.x + w.y * w.y)


class TestArithmetic:
    def test_u_squared_is_one(self):
        u = HyperbolicNumber(y=1.0)
        assert hmul(u, u) == HyperbolicNumber(x=1.0)

    def test_conjugate_and_modulus(self):
        w = HyperbolicNumber(x=5.0, y=3.0)
        assert hconj(w) == HyperbolicNumber(x=5.0, y=-3.0)
        assert hmul(w, hconj(w)) == HyperbolicNumber(x=16.0)
        assert hmodulus_sq(w) == 16.0

    def test_distance(self):
        assert hdistance(HyperbolicNumber(x=5.0, y=3.0), HyperbolicNumber()) == 4.0

    @pytest.mark.parametrize("a, b", [(1.0, 1.0), (2.5, -3.0), (-4.0, 0.5)])
    def test_zero_divisors(self, a, b):
        product = hmul(HyperbolicNumber(x=a, y=a), HyperbolicNumber(x=b, y=-b))
        assert product == HyperbolicNumber()

    @given(hyperbolic_numbers(), hyperbolic_numbers())
    def test_commutative(self, w1, w2):
        assert hmul(w1, w2) == hmul(w2, w1)

    @given(hyperbolic_numbers(), hyperbolic_numbers(), hyperbolic_numbers())
    def test_distributive(self, w1, w2, w3):
        lhs = hmul(w1, w2 + w3)
        rhs = hmul(w1, w2) + hmul(w1, w3)
        assert lhs.max_abs_diff(rhs) <= 1e-12 * max(1.0, abs(w1.x) + abs(w1.y)) * 40

    @given(hyperbolic_numbers(3.0), hyperbolic_numbers(3.0))
    def test_modulus_is_multiplicative(self, w1, w2):
        lhs = hmodulus_sq(hmul(w1, w2))
        rhs = hmodulus_sq(w1) * hmodulus_sq(w2)
        scale = (w1.x ** 2 + w1.y ** 2) * (w2.x ** 2 + w2.y ** 2)
        assert abs(lhs - rhs) <= 1e-10 * max(1.0, scale)


class TestPolar:
    def test_timelike_branch(self):
        p = polar(HyperbolicNumber(x=5.0, y=3.0))
        assert p.sign == 1
        assert p.axis is HyperbolicBranch.TIMELIKE
        assert p.rho == pytest.approx(4.0)
        assert p.phi == pytest.approx(math.atanh(0.6))

    def test_negative_spacelike_branch(self):
        p = polar(HyperbolicNumber(x=3.0, y=-5.0))
        assert p.sign == -1
        assert p.axis is HyperbolicBranch.SPACELIKE
        assert p.rho == pytest.approx(4.0)
        assert p.phi == pytest.approx(math.atanh(-0.6))

    @pytest.mark.parametrize("w", [HyperbolicNumber(x=2.0, y=2.0), HyperbolicNumber(x=1.0, y=-1.0)])
    def test_null_cone_raises(self, w):
        assert on_null_cone(w)
        with pytest.raises(NullConeError):
            polar(w)

    def test_null_cone_test_is_scale_invariant(self):
        assert on_null_cone(HyperbolicNumber(x=1e-20, y=1e-20))
        assert not on_null_cone(HyperbolicNumber(x=1e-20, y=0.0))

    def test_from_polar(self):
        p = HyperbolicPolar(sign=-1, axis=HyperbolicBranch.SPACELIKE, rho=2.0, phi=0.0)
        assert from_polar(p) == HyperbolicNumber(x=-0.0, y=-2.0)

    @given(hyperbolic_numbers())
    def test_round_trip(self, w):
        assume(off_null(w))
        back = from_polar(polar(w))
        assert back.max_abs_diff(w) <= 1e-12 * max(1.0, abs(w.x), abs(w.y))

    @given(hyperbolic_numbers(), hyperbolic_numbers())
    def test_polar_product_multiplies(self, w1, w2):
        assume(off_null(w1) and off_null(w2))
        expected = hmul(w1, w2)
        result = from_polar(polar_product(polar(w1), polar(w2)))
        assert result.max_abs_diff(expected) <= 1e-11 * max(1.0, abs(expected.x), abs(expected.y))
