"""Relativistic velocity composition among moving planes, inside G2."""

import logging
import math
from typing import Optional

from moving_planes.config import get_settings
from moving_planes.core.exceptions import (
    DegenerateDirectionError,
    SuperluminalError,
    TimeOrientationError,
)
from moving_planes.core.ga2 import E1, antisym, vector_exp, vector_part
from moving_planes.core.models import (
    CompositionResult,
    G2Multivector,
    OrientedFrame,
    PassiveBoost,
    UnitVector2,
    Vector2,
    Velocity,
)

logger = logging.getLogger(__name__)


def _speed(v: Vector2) -> float:
    speed = v.norm
    if not speed < 1.0:
        raise SuperluminalError(f"Speed must be < 1, got {speed!r}")
    return speed


def gamma_factor(v: Vector2) -> float:
    """1 / sqrt(1 - |v|^2)."""
    speed = _speed(v)
    return 1.0 / math.sqrt((1.0 - speed) * (1.0 + speed))


def _atanh(x: float) -> float:
    """atanh for |x| < 1 without cancellation near +-1."""
    if x < 0.0:
        return -_atanh(-x)
    if not x < 1.0:
        raise SuperluminalError(f"Speed must be < 1, got {x!r}")
    return 0.5 * math.log1p(2.0 * x / (1.0 - x))


def rapidity(v: Vector2) -> float:
    """Hyperbolic angle atanh(|v|), stable near the light cone."""
    return _atanh(_speed(v))


def frame_from_velocity(v: Vector2) -> OrientedFrame:
    """Positively oriented frame moving with velocity ``v``."""
    phi = rapidity(v)
    if v.norm == 0.0:
        return OrientedFrame(phi=0.0)
    return OrientedFrame(a=UnitVector2.normalized(v.v1, v.v2), phi=phi)


def compose_frames(
    j: OrientedFrame,
    k: OrientedFrame,
    tol: Optional[float] = None,
) -> CompositionResult:
    """Hyperbolic angle and relative velocity with k = j e^{omega c}.

    cosh(omega) = cosh(phi) cosh(rho) (1 - u_v . u_w) and
    v_w = (u_w - u_v - u_v ^ u_w) / (1 - u_v . u_w).
    """
    if j.orientation != 1 or k.orientation != 1:
        raise TimeOrientationError("Composition needs positively oriented frames")
    tol = get_settings().tolerance if tol is None else tol

    uv, uw = j.velocity, k.velocity
    dot = uv.dot(uw)
    denominator = 1.0 - dot
    cosh_omega = math.cosh(j.phi) * math.cosh(k.phi) * denominator
    vw = G2Multivector(
        v1=(uw.v1 - uv.v1) / denominator,
        v2=(uw.v2 - uv.v2) / denominator,
        b=-uv.wedge(uw) / denominator,
    )

    tanh_omega = math.sqrt(max(vw.square_zero_scalar, 0.0))
    omega = math.asinh(tanh_omega * max(cosh_omega, 1.0))
    if tanh_omega <= tol:
        c_direction = E1
    else:
        c_direction = vw / tanh_omega

    return CompositionResult(
        omega=omega,
        c_direction=c_direction,
        vw=vw,
        cosh_omega=cosh_omega,
    )


def passive_direction(
    uv: Velocity,
    phi: float,
    uw: Velocity,
    rho: float,
    eps: Optional[float] = None,
) -> UnitVector2:
    """d proportional to u_w cosh(rho) - u_v cosh(phi).

    Raises:
        DegenerateDirectionError: if the numerator vanishes on the scale
            cosh(phi) + cosh(rho).
    """
    eps = get_settings().degenerate_epsilon if eps is None else eps
    cp, cr = math.cosh(phi), math.cosh(rho)
    n1 = uw.v1 * cr - uv.v1 * cp
    n2 = uw.v2 * cr - uv.v2 * cp
    if math.hypot(n1, n2) < eps * (cp + cr):
        raise DegenerateDirectionError("Frames coincide: passive direction is undefined")
    return UnitVector2.normalized(n1, n2)


def passive_rapidity(uv: Velocity, uw: Velocity, d: UnitVector2) -> float:
    """Omega = atanh(u_w . d) - atanh(u_v . d).

    Equal to atanh of (p_w - p_v) / (1 - p_v p_w) but finite for every
    pair of subluminal velocities.
    """
    return _atanh(uw.dot(d)) - _atanh(uv.dot(d))


def passive_boost_factor(
    uv: Velocity,
    phi: float,
    uw: Velocity,
    rho: float,
    eps: Optional[float] = None,
) -> PassiveBoost:
    """Solve e^{rho b} = e^{Omega d/2} e^{phi a} e^{Omega d/2} for Omega and u_vw.

    Raises:
        SuperluminalError: if |u_vw| rounds to 1, which happens for
            near-light frames moving in opposite directions.
    """
    d = passive_direction(uv, phi, uw, rho, eps)
    pv, pw = uv.dot(d), uw.dot(d)

    omega = passive_rapidity(uv, uw, d)
    tanh_omega = math.tanh(omega)
    cosh_omega = (math.cosh(rho) / math.cosh(phi)) * (1.0 - pv * pw) / ((1.0 - pv) * (1.0 + pv))
    logger.debug(f"Passive boost along {d}: Omega={omega!r}")
    if not abs(tanh_omega) < 1.0:
        raise SuperluminalError(f"Relative speed rounds to 1 along {d} (Omega={omega!r})")

    return PassiveBoost(
        direction=d,
        omega=omega,
        cosh_omega=cosh_omega,
        uvw=Velocity.of(d.v1 * tanh_omega, d.v2 * tanh_omega),
    )


def velocity_add(uv: Velocity, uvw: Velocity, d: UnitVector2, omega: float) -> Velocity:
    """u_w = [u_v + u_vw + (1/cosh(Omega) - 1)(u_v ^ d) d] / (1 + u_v . u_vw)."""
    _speed(uv)
    perpendicular = vector_part(antisym(uv.to_multivector(), d.to_multivector()) * d.to_multivector())
    correction = 1.0 / math.cosh(omega) - 1.0
    denominator = 1.0 + uv.dot(uvw)
    return Velocity.of(
        (uv.v1 + uvw.v1 + correction * perpendicular.v1) / denominator,
        (uv.v2 + uvw.v2 + correction * perpendicular.v2) / denominator,
    )


def composed_cosh(phi: float, omega: float, uv: Vector2, uvw: Vector2) -> float:
    """cosh(rho) = cosh(phi) cosh(Omega) (1 + u_v . u_vw)."""
    return math.cosh(phi) * math.cosh(omega) * (1.0 + uv.dot(uvw))


def apply_passive_boost(x: G2Multivector, d: UnitVector2, omega: float) -> G2Multivector:
    """e^{Omega d/2} x e^{Omega d/2}."""
    half = vector_exp(d, omega / 2)
    return half * x * half


def compose_passive(a: UnitVector2, phi: float, d: UnitVector2, omega: float) -> G2Multivector:
    """e^{rho b} obtained by passively boosting e^{phi a}."""
    return apply_passive_boost(vector_exp(a, phi), d, omega)


def exponential_to_frame(e: G2Multivector) -> OrientedFrame:
    """Read (b, rho) off e^{rho b} = cosh(rho) + b sinh(rho)."""
    sinh_rho = math.hypot(e.v1, e.v2)
    if sinh_rho == 0.0:
        return OrientedFrame(phi=0.0)
    return OrientedFrame(a=UnitVector2.normalized(e.v1, e.v2), phi=math.asinh(sinh_rho))
