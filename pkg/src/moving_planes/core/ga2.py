"""Arithmetic of the plane algebra G2: products, grades, exponentials."""

import logging
import math
from typing import Optional

import numpy as np

from moving_planes.config import get_settings
from moving_planes.core.exceptions import ScalarPartError, ValidationError
from moving_planes.core.models import G2Multivector, Vector2, ZeroScalarClass

logger = logging.getLogger(__name__)

ONE = G2Multivector(s=1.0)
E1 = G2Multivector(v1=1.0)
E2 = G2Multivector(v2=1.0)
I = G2Multivector(b=1.0)  # noqa: E741


def gp(a: G2Multivector, b: G2Multivector) -> G2Multivector:
    """Geometric product."""
    return a * b


def sym(a: G2Multivector, b: G2Multivector) -> G2Multivector:
    """Symmetric product (ab + ba) / 2."""
    return (a * b + b * a) / 2


def antisym(a: G2Multivector, b: G2Multivector) -> G2Multivector:
    """Antisymmetric product (ab - ba) / 2."""
    return (a * b - b * a) / 2


def inner_vec(a: Vector2, b: Vector2) -> float:
    return a.dot(b)


def outer_vec(a: Vector2, b: Vector2) -> float:
    """Coefficient of i in a ^ b."""
    return a.wedge(b)


def grade(g: G2Multivector, k: int) -> G2Multivector:
    """Projection of ``g`` onto grade 0, 1 or 2."""
    if k not in (0, 1, 2):
        raise ValidationError(f"Grade must be 0, 1 or 2, got {k!r}")
    return g.grade_part(k)


def scalar_part(g: G2Multivector) -> float:
    return g.s


def vector_part(g: G2Multivector) -> Vector2:
    return Vector2(v1=g.v1, v2=g.v2)


def bivector_part(g: G2Multivector) -> float:
    return g.b


def reverse(g: G2Multivector) -> G2Multivector:
    """Reversion: negates the bivector part."""
    return ~g


def conjugate(g: G2Multivector) -> G2Multivector:
    """Clifford conjugation: negates vector and bivector parts."""
    return g.flip_grades((1, 2))


def _require_zero_scalar(a: G2Multivector, tol: Optional[float]) -> None:
    tol = get_settings().tolerance if tol is None else tol
    if abs(a.s) > tol * max(1.0, a.max_abs()):
        raise ScalarPartError(f"Expected zero scalar part, got {a.s!r} in {a}")


def sym_zero_scalar(a: G2Multivector, b: G2Multivector, tol: Optional[float] = None) -> float:
    """Closed form a1 b1 + a2 b2 - a3 b3 of the symmetric product."""
    _require_zero_scalar(a, tol)
    _require_zero_scalar(b, tol)
    return a.v1 * b.v1 + a.v2 * b.v2 - a.b * b.b


def antisym_zero_scalar(
    a: G2Multivector, b: G2Multivector, tol: Optional[float] = None
) -> G2Multivector:
    """Closed form -det[[e1, e2, -i], a, b] of the antisymmetric product."""
    _require_zero_scalar(a, tol)
    _require_zero_scalar(b, tol)
    return G2Multivector(
        v1=-(a.v2 * b.b - a.b * b.v2),
        v2=a.v1 * b.b - a.b * b.v1,
        b=a.v1 * b.v2 - a.v2 * b.v1,
    )


def triple_sym(
    a: G2Multivector,
    b: G2Multivector,
    c: G2Multivector,
    tol: Optional[float] = None,
) -> float:
    """Scalar A o (B x C), equal to minus the determinant of the rows a, b, c."""
    for element in (a, b, c):
        _require_zero_scalar(element, tol)
    return sym(a, antisym(b, c)).s


def classify_zero_scalar(a: G2Multivector, tol: Optional[float] = None) -> ZeroScalarClass:
    """Relative vector, nilpotent or relative bivector by the sign of A^2."""
    _require_zero_scalar(a, tol)
    tol = get_settings().tolerance if tol is None else tol
    square = a.square_zero_scalar
    eps = tol * max(1.0, a.max_abs() ** 2)
    if abs(square) < eps:
        return ZeroScalarClass.NILPOTENT
    if square > 0:
        return ZeroScalarClass.RELATIVE_VECTOR
    return ZeroScalarClass.RELATIVE_BIVECTOR


def _sinc_like(x: float, hyperbolic: bool) -> float:
    """sin(x)/x or sinh(x)/x with the removable singularity filled in.

    The series branch needs |x| below ``taylor_threshold``. With the default
    tolerance such elements already classify as nilpotent, so it is reached
    only when ``exp_zero_scalar`` gets a smaller ``tol``.
    """
    if abs(x) < get_settings().taylor_threshold:
        x2 = x * x
        return 1.0 + x2 / 6.0 if hyperbolic else 1.0 - x2 / 6.0
    return (math.sinh(x) if hyperbolic else math.sin(x)) / x


def exp_zero_scalar(a: G2Multivector, tol: Optional[float] = None) -> G2Multivector:
    """Exact exponential of a zero-scalar element."""
    kind = classify_zero_scalar(a, tol)
    square = a.square_zero_scalar

    if kind is ZeroScalarClass.NILPOTENT:
        return ONE + a
    if kind is ZeroScalarClass.RELATIVE_VECTOR:
        phi = math.sqrt(square)
        return math.cosh(phi) + a * _sinc_like(phi, hyperbolic=True)
    theta = math.sqrt(-square)
    return math.cos(theta) + a * _sinc_like(theta, hyperbolic=False)


def exp(g: G2Multivector, tol: Optional[float] = None) -> G2Multivector:
    """Exponential of a general element; the scalar part is central."""
    zero_scalar = G2Multivector(v1=g.v1, v2=g.v2, b=g.b)
    return math.exp(g.s) * exp_zero_scalar(zero_scalar, tol)


def exp_series(g: G2Multivector, terms: Optional[int] = None) -> G2Multivector:
    """Truncated power series sum g^n / n!, used as an oracle."""
    terms = get_settings().series_terms if terms is None else terms
    total = np.zeros(4)
    power = ONE
    for n in range(terms):
        total = total + power.coefficients / math.factorial(n)
        power = power * g
    return G2Multivector.from_array(total)


def vector_exp(a: Vector2, phi: float) -> G2Multivector:
    """e^{phi a} = cosh(phi) + a sinh(phi) for a unit vector a."""
    return G2Multivector(s=math.cosh(phi), v1=a.v1 * math.sinh(phi), v2=a.v2 * math.sinh(phi))


def bivector_exp(theta: float) -> G2Multivector:
    """e^{i theta} = cos(theta) + i sin(theta)."""
    return G2Multivector(s=math.cos(theta), b=math.sin(theta))
