"""Spectral-basis 2x2 matrix representation of G2 and its complexification."""

import numpy as np

from moving_planes.core.ga2 import E1
from moving_planes.core.models import (
    G2Multivector,
    G12Multivector,
    Idempotent,
    Mat2,
    Mat2Complexified,
)
from moving_planes.core.spacetime import (
    PSEUDOSCALAR,
    embed_even,
    even_part,
    odd_part,
    project_even,
)


def matrix_array(coefficients: np.ndarray) -> np.ndarray:
    """Matrices of (..., 4) coefficient rows (s, v1, v2, b), shaped (..., 2, 2)."""
    s, v1, v2, b = np.moveaxis(np.asarray(coefficients, dtype=float), -1, 0)
    return np.stack(
        (np.stack((s + v2, v1 - b), axis=-1), np.stack((v1 + b, s - v2), axis=-1)),
        axis=-2,
    )


def matrix_of(g: G2Multivector) -> Mat2:
    """[g] = [[x + v2, v1 - y], [v1 + y, x - v2]] for g = x + v1 e1 + v2 e2 + y i."""
    return Mat2.from_array(matrix_array(g.coefficients))


def from_matrix(m: Mat2) -> G2Multivector:
    return G2Multivector(
        s=(m.m11 + m.m22) / 2,
        v1=(m.m12 + m.m21) / 2,
        v2=(m.m11 - m.m22) / 2,
        b=(m.m21 - m.m12) / 2,
    )


def e1_conjugate(g: G2Multivector) -> G2Multivector:
    """e1 g e1."""
    return E1 * g * E1


def spectral_entry(x: G2Multivector) -> float:
    """lambda with u+ x u+ = lambda u+."""
    u_plus = Idempotent.U_PLUS.element()
    return 2.0 * (u_plus * x * u_plus).s


def spectral_matrix_of(g: G2Multivector) -> Mat2:
    """[g] entry by entry from the spectral basis: (g, g e1; e1 g, e1 g e1)."""
    return Mat2(
        m=(
            (spectral_entry(g), spectral_entry(g * E1)),
            (spectral_entry(E1 * g), spectral_entry(e1_conjugate(g))),
        )
    )


def split_complexified(f: G12Multivector) -> tuple[G2Multivector, G2Multivector]:
    """f = g + s h with g, h in the even subalgebra; h = -s (odd part)."""
    g = project_even(even_part(f))
    h = project_even(-PSEUDOSCALAR * odd_part(f))
    return g, h


def matrix_of_f(f: G12Multivector) -> Mat2Complexified:
    """[f] = [g] + s [h]."""
    g, h = split_complexified(f)
    return Mat2Complexified(re=matrix_of(g), im=matrix_of(h))


def from_matrix_f(m: Mat2Complexified) -> G12Multivector:
    return embed_even(from_matrix(m.re)) + PSEUDOSCALAR * embed_even(from_matrix(m.im))


def matrix_main_involution(m: Mat2Complexified) -> Mat2Complexified:
    """(A, B) -> (A, -B)."""
    return Mat2Complexified(re=m.re, im=Mat2.from_array(-m.im.array))


def matrix_reversion(m: Mat2Complexified) -> Mat2Complexified:
    """(A, B) -> (adj A, -adj B)."""
    return Mat2Complexified(re=m.re.adjugate(), im=Mat2.from_array(-m.im.adjugate().array))


def matrix_clifford_conj(m: Mat2Complexified) -> Mat2Complexified:
    """(A, B) -> (adj A, adj B)."""
    return Mat2Complexified(re=m.re.adjugate(), im=m.im.adjugate())
