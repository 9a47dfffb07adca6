"""The spacetime algebra G12: even split, duality, Minkowski geometry."""

import logging
import math
from typing import Optional

from moving_planes.config import get_settings
from moving_planes.core.exceptions import (
    DegenerateDError,
    NotEvenError,
    NotUnitBivectorError,
    NotUnitTimelikeError,
    TimeOrientationError,
    ZeroVectorError,
)
from moving_planes.core.ga2 import vector_exp
from moving_planes.core.models import (
    CausalClass,
    DSplit,
    G2Multivector,
    G12Multivector,
    MinkowskiVector,
    SpacetimeComposition,
    UnitVector2,
)
from moving_planes.core.transforms import classify_unit_minus_one

logger = logging.getLogger(__name__)

ZERO = G12Multivector()
ONE = G12Multivector(scalar_part=1.0)
GAMMA0 = G12Multivector(g0=1.0)
GAMMA1 = G12Multivector(g1=1.0)
GAMMA2 = G12Multivector(g2=1.0)
PSEUDOSCALAR = G12Multivector(g012=1.0)

EVEN_GRADES = (0, 2)
ODD_GRADES = (1, 3)


def gp12(a: G12Multivector, b: G12Multivector) -> G12Multivector:
    """Geometric product with signature (1, 2)."""
    return a * b


def embed_even(g: G2Multivector) -> G12Multivector:
    """e1 -> g01, e2 -> g02, e12 -> g21."""
    return G12Multivector(scalar_part=g.s, g01=g.v1, g02=g.v2, g21=g.b)


def even_part(f: G12Multivector) -> G12Multivector:
    return sum((f.grade_part(k) for k in EVEN_GRADES), ZERO)


def odd_part(f: G12Multivector) -> G12Multivector:
    return sum((f.grade_part(k) for k in ODD_GRADES), ZERO)


def project_even(f: G12Multivector, tol: Optional[float] = None) -> G2Multivector:
    """Inverse of ``embed_even``.

    Raises:
        NotEvenError: if ``f`` has an odd-grade part.
    """
    tol = get_settings().tolerance if tol is None else tol
    if odd_part(f).max_abs() > tol * max(1.0, f.max_abs()):
        raise NotEvenError(f"{f} has an odd-grade part")
    return G2Multivector(s=f.scalar_part, v1=f.g01, v2=f.g02, b=f.g21)


def to_vector(f: G12Multivector) -> MinkowskiVector:
    """Grade-1 coefficients of ``f``."""
    return MinkowskiVector(t=f.g0, x1=f.g1, x2=f.g2)


def psi(h: G2Multivector, tol: Optional[float] = None) -> MinkowskiVector:
    """Duality r = s h from positively oriented unit bivectors to unit timelike vectors.

    psi(h1 e1 + h2 e2 + h3 i) = h3 g0 - h2 g1 + h1 g2.
    """
    frame = classify_unit_minus_one(h, tol)
    if frame.orientation != 1:
        raise NotUnitBivectorError(f"{h} is not positively oriented")
    return to_vector(PSEUDOSCALAR * embed_even(h))


def psi_inverse(r: MinkowskiVector, tol: Optional[float] = None) -> G2Multivector:
    """h = -s r for a future-pointing unit timelike r."""
    _require_unit_timelike(r, tol)
    return project_even(-PSEUDOSCALAR * r.to_multivector(), tol)


def boost_vector(x: MinkowskiVector, a: UnitVector2, phi: float) -> MinkowskiVector:
    """x e^{phi a} with a embedded in the even subalgebra."""
    return to_vector(x.to_multivector() * embed_even(vector_exp(a, phi)))


def mink_inner(x: MinkowskiVector, y: MinkowskiVector) -> float:
    """Scalar part of x y."""
    return (x.to_multivector() * y.to_multivector()).scalar_part


def mink_outer(x: MinkowskiVector, y: MinkowskiVector) -> G12Multivector:
    """Bivector part of x y."""
    return (x.to_multivector() * y.to_multivector()).grade_part(2)


def causal_class(x: MinkowskiVector, tol: Optional[float] = None) -> CausalClass:
    """Timelike, spacelike or lightlike by the sign of x^2."""
    tol = get_settings().tolerance if tol is None else tol
    scale = x.t * x.t + x.x1 * x.x1 + x.x2 * x.x2
    if scale == 0.0:
        raise ZeroVectorError("The zero vector has no causal class")
    square = mink_inner(x, x)
    if abs(square) <= tol * scale:
        return CausalClass.LIGHTLIKE
    return CausalClass.TIMELIKE if square > 0 else CausalClass.SPACELIKE


def _require_unit_timelike(x: MinkowskiVector, tol: Optional[float] = None) -> None:
    tol = get_settings().tolerance if tol is None else tol
    if abs(x.square - 1.0) > tol * max(1.0, x.t * x.t):
        raise NotUnitTimelikeError(f"{x} is not unit timelike")
    if x.t <= 0:
        raise TimeOrientationError(f"{x} is past-pointing")


def relative_velocity_bivector(
    u: MinkowskiVector,
    v: MinkowskiVector,
    tol: Optional[float] = None,
) -> G12Multivector:
    """u_v = (u ^ v) / (u . v)."""
    tol = get_settings().tolerance if tol is None else tol
    for x in (u, v):
        if abs(x.square - 1.0) > tol * max(1.0, x.t * x.t):
            raise NotUnitTimelikeError(f"{x} is not unit timelike")
    dot = mink_inner(u, v)
    if dot <= 0:
        raise TimeOrientationError("Timelike vectors have opposite time orientation")
    return mink_outer(u, v) / dot


def recompute_composition(
    u: MinkowskiVector,
    v: MinkowskiVector,
    w: MinkowskiVector,
    tol: Optional[float] = None,
) -> SpacetimeComposition:
    """v . w and v_w from the velocities of v and w relative to u.

    v.w = (v.u)(w.u)(1 - u_v . u_w) and
    (v.w) v_w = (v.u)(w.u)(u_w - u_v - u_v ^ u_w).
    """
    for x in (u, v, w):
        _require_unit_timelike(x, tol)

    uv = relative_velocity_bivector(u, v, tol)
    uw = relative_velocity_bivector(u, w, tol)
    p = uv * uw
    factor = mink_inner(v, u) * mink_inner(w, u)
    v_dot_w = factor * (1.0 - p.scalar_part)
    vw = (uw - uv - p.grade_part(2)) * (factor / v_dot_w)
    return SpacetimeComposition(v_dot_w=v_dot_w, vw=vw)


def _vector_dot_bivector(x: MinkowskiVector, d: G12Multivector) -> MinkowskiVector:
    return to_vector((x.to_multivector() * d).grade_part(1))


def d_split(
    u: MinkowskiVector,
    v: MinkowskiVector,
    w: MinkowskiVector,
    tol: Optional[float] = None,
) -> DSplit:
    """Split v and w into parts parallel and perpendicular to D = (w - v) ^ u.

    Raises:
        DegenerateDError: if D vanishes or is null.
    """
    tol = get_settings().tolerance if tol is None else tol
    eps = get_settings().degenerate_epsilon
    d = mink_outer(w - v, u)
    d_square = (d * d).scalar_part
    norm_sq = float((d.coefficients ** 2).sum())
    if norm_sq <= tol * tol or abs(d_square) <= eps * norm_sq:
        raise DegenerateDError(f"D = {d} is degenerate")
    d_inv = d / d_square

    def split(x: MinkowskiVector) -> tuple[MinkowskiVector, MinkowskiVector]:
        product = x.to_multivector() * d
        par = to_vector(product.grade_part(1) * d_inv)
        perp = to_vector(product.grade_part(3) * d_inv)
        return par, perp

    w_par, w_perp = split(w)
    v_par, v_perp = split(v)
    return DSplit(d=d, w_par=w_par, w_perp=w_perp, v_par=v_par, v_perp=v_perp)


def parallel_rotor(
    u: MinkowskiVector,
    v: MinkowskiVector,
    w: MinkowskiVector,
    tol: Optional[float] = None,
) -> G12Multivector:
    """(w . D)(v . D)^{-1}; the identity when v = w."""
    tol = get_settings().tolerance if tol is None else tol
    if v.max_abs_diff(w) <= tol:
        return ONE
    split = d_split(u, v, w, tol)
    w_dot = _vector_dot_bivector(w, split.d).to_multivector()
    v_dot = _vector_dot_bivector(v, split.d).to_multivector()
    return w_dot * v_dot / (v_dot * v_dot).scalar_part


def rotor_sqrt(p: G12Multivector) -> G12Multivector:
    """(1 + P) / sqrt(2 (1 + P0)) for a unit rotor P."""
    return (ONE + p) / math.sqrt(2.0 * (1.0 + p.scalar_part))


def parallel_boost(
    u: MinkowskiVector,
    v: MinkowskiVector,
    w: MinkowskiVector,
    x: MinkowskiVector,
    tol: Optional[float] = None,
) -> MinkowskiVector:
    """L_u(x) = P^{1/2} x (P~)^{1/2}, which takes v to w."""
    half = rotor_sqrt(parallel_rotor(u, v, w, tol))
    return to_vector(half * x.to_multivector() * ~half)


def main_involution(f: G12Multivector) -> G12Multivector:
    """Negates grades 1 and 3."""
    return f.flip_grades((1, 3))


def reversion(f: G12Multivector) -> G12Multivector:
    """Negates grades 2 and 3."""
    return f.flip_grades((2, 3))


def clifford_conj(f: G12Multivector) -> G12Multivector:
    """Reversion of the main involution; negates grades 1 and 2."""
    return reversion(main_involution(f))
