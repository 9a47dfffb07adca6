"""Hyperbolic number plane: products, conjugates and Euler forms."""

import math
from typing import Optional

from moving_planes.config import get_settings
from moving_planes.core.exceptions import NullConeError
from moving_planes.core.models import HyperbolicBranch, HyperbolicNumber, HyperbolicPolar


def hmul(w1: HyperbolicNumber, w2: HyperbolicNumber) -> HyperbolicNumber:
    """(x1 x2 + y1 y2) + u (x1 y2 + x2 y1)."""
    return w1 * w2


def hconj(w: HyperbolicNumber) -> HyperbolicNumber:
    """w- = x - u y."""
    return HyperbolicNumber(x=w.x, y=-w.y)


def hmodulus_sq(w: HyperbolicNumber) -> float:
    """|w w-| = |x^2 - y^2|."""
    return abs(w.x * w.x - w.y * w.y)


def hdistance(w1: HyperbolicNumber, w2: HyperbolicNumber) -> float:
    return math.sqrt(hmodulus_sq(w1 - w2))


def on_null_cone(w: HyperbolicNumber, eps: Optional[float] = None) -> bool:
    eps = get_settings().null_cone_epsilon if eps is None else eps
    return abs(w.x * w.x - w.y * w.y) <= eps * (w.x * w.x + w.y * w.y)


def polar(w: HyperbolicNumber, eps: Optional[float] = None) -> HyperbolicPolar:
    """Euler form of ``w`` on one of its four branches.

    Raises:
        NullConeError: if |x| = |y| within ``eps`` (scale-invariant).
    """
    if on_null_cone(w, eps):
        raise NullConeError(f"{w} lies on the null cone")

    rho = math.sqrt(hmodulus_sq(w))
    if abs(w.x) > abs(w.y):
        return HyperbolicPolar(
            sign=1 if w.x > 0 else -1,
            axis=HyperbolicBranch.TIMELIKE,
            rho=rho,
            phi=math.atanh(w.y / w.x),
        )
    return HyperbolicPolar(
        sign=1 if w.y > 0 else -1,
        axis=HyperbolicBranch.SPACELIKE,
        rho=rho,
        phi=math.atanh(w.x / w.y),
    )


def from_polar(p: HyperbolicPolar) -> HyperbolicNumber:
    """Reconstruct sign * rho * e^{u phi}, or sign * rho * u e^{u phi}."""
    scale = p.sign * p.rho
    c, s = math.cosh(p.phi), math.sinh(p.phi)
    if p.axis is HyperbolicBranch.TIMELIKE:
        return HyperbolicNumber(x=scale * c, y=scale * s)
    return HyperbolicNumber(x=scale * s, y=scale * c)


def polar_product(p1: HyperbolicPolar, p2: HyperbolicPolar) -> HyperbolicPolar:
    """Moduli multiply and angles add; u * u = 1 folds two spacelike factors."""
    spacelike = (p1.axis is HyperbolicBranch.SPACELIKE) != (p2.axis is HyperbolicBranch.SPACELIKE)
    return HyperbolicPolar(
        sign=p1.sign * p2.sign,
        axis=HyperbolicBranch.SPACELIKE if spacelike else HyperbolicBranch.TIMELIKE,
        rho=p1.rho * p2.rho,
        phi=p1.phi + p2.phi,
    )
