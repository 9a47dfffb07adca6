"""Rotations, active boosts, relative bases and the h^2 = -1 classification."""

import logging
import math
from typing import Optional

from moving_planes.config import get_settings
from moving_planes.core.exceptions import AmbiguousRotorError, NotUnitBivectorError
from moving_planes.core.ga2 import I, bivector_exp, vector_exp, vector_part
from moving_planes.core.models import (
    G2Multivector,
    OrientedFrame,
    RelativeBasis,
    UnitVector2,
    Vector2,
)

logger = logging.getLogger(__name__)


def rotate_multivector(g: G2Multivector, theta: float) -> G2Multivector:
    """e^{-i theta/2} g e^{i theta/2}; leaves scalars and i fixed."""
    return bivector_exp(-theta / 2) * g * bivector_exp(theta / 2)


def rotate(x: Vector2, theta: float) -> Vector2:
    """Counterclockwise rotation of ``x`` by ``theta`` in the plane of i."""
    return vector_part(rotate_multivector(x.to_multivector(), theta))


def rotor_between(a: UnitVector2, b: UnitVector2, tol: Optional[float] = None) -> G2Multivector:
    """(ba)^{1/2} = e^{-i theta/2}, the rotor whose sandwich takes a to b.

    Raises:
        AmbiguousRotorError: if a = -b.
    """
    tol = get_settings().tolerance if tol is None else tol
    cos_theta = a.dot(b)
    sin_theta = a.wedge(b)
    if 1.0 + cos_theta <= tol:
        raise AmbiguousRotorError(f"Rotor between antipodal vectors {a} and {b} is not unique")

    half = math.atan2(sin_theta, cos_theta) / 2
    return G2Multivector(s=math.cos(half), b=-math.sin(half))


def active_boost(x: G2Multivector, a: UnitVector2, phi: float) -> G2Multivector:
    """e^{-phi a/2} x e^{phi a/2}."""
    return vector_exp(a, -phi / 2) * x * vector_exp(a, phi / 2)


def relative_basis(a: UnitVector2, phi: float) -> RelativeBasis:
    """e1' = a, e2' = a i e^{phi a}, j = i e^{phi a}."""
    e1p = a.to_multivector()
    j = I * vector_exp(a, phi)
    return RelativeBasis(e1p=e1p, e2p=e1p * j, j=j)


def relative_coordinates(x: G2Multivector, basis: RelativeBasis) -> tuple[float, float]:
    """Coordinates (x1', x2') of a relative vector x = x1' e1' + x2' e2'.

    Uses e1'^2 = e2'^2 = 1 and e1' e2' = -e2' e1'.
    """
    x1 = (x * basis.e1p + basis.e1p * x).s / 2
    x2 = (x * basis.e2p + basis.e2p * x).s / 2
    return x1, x2


def classify_unit_minus_one(h: G2Multivector, tol: Optional[float] = None) -> OrientedFrame:
    """Write h = orientation * i * e^{phi a}.

    For h3 >= 0 the frame is positively oriented with phi >= 0; otherwise
    the orientation is -1 and phi <= 0 with the same direction a.

    Raises:
        NotUnitBivectorError: if h has a scalar part or h^2 != -1.
    """
    tol = get_settings().tolerance if tol is None else tol
    scale = max(1.0, h.max_abs() ** 2)
    if abs(h.s) > tol * max(1.0, h.max_abs()):
        raise NotUnitBivectorError(f"{h} has a scalar part")
    if abs(h.square_zero_scalar + 1.0) > tol * scale:
        raise NotUnitBivectorError(f"{h} does not square to -1")

    n = math.hypot(h.v1, h.v2)
    orientation = 1 if h.b >= 0 else -1
    if n <= tol:
        logger.debug(f"Zero-velocity frame {h}, using canonical direction e1")
        return OrientedFrame(orientation=orientation, a=UnitVector2(v1=1.0, v2=0.0), phi=0.0)

    a = UnitVector2.normalized(-h.v2, h.v1)
    phi = math.asinh(n)
    return OrientedFrame(orientation=orientation, a=a, phi=phi if orientation == 1 else -phi)


def frame_velocity(frame: OrientedFrame) -> Vector2:
    """u = a tanh(phi)."""
    return frame.velocity


def frame_reverse_velocity(frame: OrientedFrame) -> Vector2:
    """Velocity of the rest plane i as seen from ``frame``: -a tanh(phi)."""
    return -frame.velocity
