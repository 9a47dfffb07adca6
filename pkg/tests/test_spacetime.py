"""Tests for the spacetime algebra G12 and the duality with moving planes."""

import math

import pytest
from hypothesis import assume, given

from moving_planes.core import ga2, kinematics, spacetime
from moving_planes.core.exceptions import (
    DegenerateDError,
    NotEvenError,
    NotUnitBivectorError,
    NotUnitTimelikeError,
    TimeOrientationError,
    ZeroVectorError,
)
from moving_planes.core.models import (
    CausalClass,
    G2Multivector,
    G12Multivector,
    MinkowskiVector,
    OrientedFrame,
    UnitVector2,
    Velocity,
)
from moving_planes.core.transforms import active_boost
from tests.strategies import frames, g2_multivectors, g12_multivectors, rapidities, unit_vectors

E1 = UnitVector2(v1=1.0, v2=0.0)
E2 = UnitVector2(v1=0.0, v2=1.0)
U = MinkowskiVector(t=1.0)


def timelike(frame: OrientedFrame) -> MinkowskiVector:
    return spacetime.psi(frame.bivector())


class TestProducts:
    def test_signature(self):
        assert spacetime.GAMMA0 * spacetime.GAMMA0 == spacetime.ONE
        assert spacetime.GAMMA1 * spacetime.GAMMA1 == -spacetime.ONE
        assert spacetime.GAMMA2 * spacetime.GAMMA2 == -spacetime.ONE
        assert spacetime.GAMMA0 * spacetime.GAMMA1 * spacetime.GAMMA2 == spacetime.PSEUDOSCALAR

    def test_pseudoscalar_squares_to_minus_one(self):
        s = spacetime.PSEUDOSCALAR
        assert (s * s).isclose(-spacetime.ONE, 0.0)

    @given(g12_multivectors())
    def test_pseudoscalar_is_central(self, f):
        s = spacetime.PSEUDOSCALAR
        assert (s * f).max_abs_diff(f * s) == 0.0

    @given(g12_multivectors(), g12_multivectors(), g12_multivectors())
    def test_associativity(self, a, b, c):
        scale = max(1.0, a.max_abs() * b.max_abs() * c.max_abs())
        assert (spacetime.gp12(spacetime.gp12(a, b), c)).max_abs_diff(
            spacetime.gp12(a, spacetime.gp12(b, c))
        ) <= 1e-12 * scale

    @given(g2_multivectors(), g2_multivectors())
    def test_even_embedding_is_a_homomorphism(self, a, b):
        lhs = spacetime.embed_even(a * b)
        rhs = spacetime.embed_even(a) * spacetime.embed_even(b)
        assert lhs.max_abs_diff(rhs) <= 1e-12 * max(1.0, a.max_abs() * b.max_abs())

    def test_project_even_rejects_odd_parts(self):
        with pytest.raises(NotEvenError):
            spacetime.project_even(spacetime.GAMMA0)

    def test_even_split(self):
        f = G12Multivector.from_array([1, 2, 3, 4, 5, 6, 7, 8])
        assert (spacetime.even_part(f) + spacetime.odd_part(f)) == f
        assert spacetime.project_even(spacetime.even_part(f)) == G2Multivector(s=1, v1=5, v2=6, b=7)


class TestDuality:
    def test_rest_plane_is_g0(self):
        assert spacetime.psi(ga2.I) == MinkowskiVector(t=1.0, x1=0.0, x2=0.0)

    def test_coordinates(self):
        h = G2Multivector(v1=1.0, b=math.sqrt(2.0))
        r = spacetime.psi(h)
        assert r.t == pytest.approx(math.sqrt(2.0))
        assert r.x1 == pytest.approx(0.0, abs=1e-15)
        assert r.x2 == pytest.approx(1.0)

    def test_negative_orientation_rejected(self):
        with pytest.raises(NotUnitBivectorError):
            spacetime.psi(-ga2.I)

    @given(frames())
    def test_unit_timelike(self, frame):
        r = timelike(frame)
        assert r.square == pytest.approx(1.0, abs=1e-10 * math.cosh(frame.phi) ** 2)
        assert spacetime.causal_class(r) is CausalClass.TIMELIKE

    @given(frames())
    def test_inverse(self, frame):
        h = spacetime.psi_inverse(timelike(frame))
        assert h.max_abs_diff(frame.bivector()) <= 1e-12 * math.cosh(frame.phi)

    @given(unit_vectors(), rapidities())
    def test_commutes_with_boosts(self, a, phi):
        lhs = spacetime.psi(active_boost(ga2.I, a, phi))
        rhs = spacetime.boost_vector(U, a, phi)
        assert lhs.max_abs_diff(rhs) <= 1e-11 * math.cosh(phi)


class TestMinkowski:
    @pytest.mark.parametrize(
        "x, expected",
        [
            (MinkowskiVector(t=2.0, x1=1.0), CausalClass.TIMELIKE),
            (MinkowskiVector(t=1.0, x2=2.0), CausalClass.SPACELIKE),
            (MinkowskiVector(t=1.0, x1=0.6, x2=0.8), CausalClass.LIGHTLIKE),
        ],
    )
    def test_causal_class(self, x, expected):
        assert spacetime.causal_class(x) is expected

    def test_zero_vector_has_no_class(self):
        with pytest.raises(ZeroVectorError):
            spacetime.causal_class(MinkowskiVector())

    def test_inner_and_outer(self):
        x = MinkowskiVector(t=2.0, x1=1.0)
        y = MinkowskiVector(t=1.0, x2=1.0)
        assert spacetime.mink_inner(x, y) == 2.0
        outer = spacetime.mink_outer(x, y)
        assert outer == G12Multivector(g01=-1.0, g02=2.0, g21=-1.0)

    def test_gamma_spot_value(self):
        v = timelike(OrientedFrame(a=E1, phi=math.atanh(0.6)))
        uv = spacetime.relative_velocity_bivector(U, v)
        speed = math.sqrt((uv * uv).scalar_part)
        assert speed == pytest.approx(0.6, abs=1e-12)
        assert spacetime.mink_inner(U, v) == pytest.approx(1.25, abs=1e-12)

    def test_relative_velocity_needs_unit_vectors(self):
        with pytest.raises(NotUnitTimelikeError):
            spacetime.relative_velocity_bivector(U, MinkowskiVector(t=2.0))

    def test_past_pointing_rejected(self):
        with pytest.raises(TimeOrientationError):
            spacetime.recompute_composition(U, MinkowskiVector(t=-1.0), U)


class TestComposition:
    def test_collinear(self):
        v = timelike(OrientedFrame(a=E1, phi=math.atanh(0.5)))
        w = timelike(OrientedFrame(a=E1, phi=math.atanh(0.8)))
        result = spacetime.recompute_composition(U, v, w)
        assert result.v_dot_w == pytest.approx(1.0 / math.sqrt(0.75))
        assert result.vw.isclose(spacetime.embed_even(G2Multivector(v1=0.5)), 1e-12)

    @given(frames(2.0), frames(2.0))
    def test_agrees_with_plane_route(self, j, k):
        plane = kinematics.compose_frames(j, k)
        space = spacetime.recompute_composition(U, timelike(j), timelike(k))
        scale = max(1.0, plane.cosh_omega)
        assert abs(space.v_dot_w - plane.cosh_omega) <= 1e-10 * scale
        assert space.vw.max_abs_diff(spacetime.embed_even(plane.vw)) <= 1e-10 * scale

    @given(frames(1.5), frames(1.5), frames(1.5))
    def test_observer_independent(self, i, j, k):
        u, v, w = timelike(i), timelike(j), timelike(k)
        result = spacetime.recompute_composition(u, v, w)
        dot = spacetime.mink_inner(v, w)
        assert result.v_dot_w == pytest.approx(dot, rel=1e-10)


class TestParallelBoost:
    def test_d_split_degenerate(self):
        v = timelike(OrientedFrame(a=E1, phi=0.3))
        with pytest.raises(DegenerateDError):
            spacetime.d_split(U, v, v)

    def test_parallel_rotor_identity(self):
        v = timelike(OrientedFrame(a=E1, phi=0.3))
        assert spacetime.parallel_rotor(U, v, v) == spacetime.ONE

    def test_collinear_rotor_is_full_rotor(self):
        v = timelike(OrientedFrame(a=E1, phi=0.3))
        w = timelike(OrientedFrame(a=E1, phi=1.1))
        rotor = spacetime.parallel_rotor(U, v, w)
        full = w.to_multivector() * v.to_multivector()
        assert rotor.max_abs_diff(full) <= 1e-10
        assert rotor.scalar_part == pytest.approx(math.cosh(0.8))

    def test_non_coplanar_scalar_is_passive_cosh(self):
        j = OrientedFrame(a=E1, phi=math.atanh(0.5))
        k = OrientedFrame(a=E2, phi=math.atanh(0.5))
        rotor = spacetime.parallel_rotor(U, timelike(j), timelike(k))
        boost = kinematics.passive_boost_factor(
            Velocity.of(0.5, 0.0), j.phi, Velocity.of(0.0, 0.5), k.phi
        )
        assert rotor.scalar_part == pytest.approx(boost.cosh_omega, rel=1e-10)

    @given(frames(1.5), frames(1.5), frames(1.5))
    def test_split_and_boost(self, i, j, k):
        u, v, w = timelike(i), timelike(j), timelike(k)
        d = spacetime.mink_outer(w - v, u)
        norm_sq = float((d.coefficients ** 2).sum())
        assume(norm_sq > 1e-6 and abs((d * d).scalar_part) > 1e-3 * norm_sq)

        split = spacetime.d_split(u, v, w)
        assert (split.w_par + split.w_perp).max_abs_diff(w) <= 1e-10 * w.t
        assert (split.v_par + split.v_perp).max_abs_diff(v) <= 1e-10 * v.t
        assert split.w_perp.max_abs_diff(split.v_perp) <= 1e-9 * max(v.t, w.t)

        image = spacetime.parallel_boost(u, v, w, v)
        assert image.max_abs_diff(w) <= 1e-9 * w.t


class TestInvolutions:
    def test_grades(self):
        f = G12Multivector.from_array([1, 1, 1, 1, 1, 1, 1, 1])
        assert spacetime.main_involution(f).coefficients.tolist() == [1, -1, -1, -1, 1, 1, 1, -1]
        assert spacetime.reversion(f).coefficients.tolist() == [1, 1, 1, 1, -1, -1, -1, -1]
        assert spacetime.clifford_conj(f).coefficients.tolist() == [1, -1, -1, -1, -1, -1, -1, 1]

    @given(g12_multivectors(), g12_multivectors())
    def test_products(self, f, g):
        scale = max(1.0, f.max_abs() * g.max_abs()) * 1e-12
        assert spacetime.main_involution(f * g).max_abs_diff(
            spacetime.main_involution(f) * spacetime.main_involution(g)
        ) <= scale
        assert spacetime.reversion(f * g).max_abs_diff(
            spacetime.reversion(g) * spacetime.reversion(f)
        ) <= scale
        assert spacetime.clifford_conj(f * g).max_abs_diff(
            spacetime.clifford_conj(g) * spacetime.clifford_conj(f)
        ) <= scale
