"""Product tables for the plane algebra G2 and the spacetime algebra G12.

Basis blades are encoded as bitmaps over the generating vectors. A basis
element of a fixed ordered basis is a signed blade, so a basis is a list of
(bitmap, sign) pairs. The Cayley tensor T satisfies

    (a b)_k = sum_ij a_i b_j T[i, j, k]

and products are evaluated with a single ``numpy.einsum`` contraction.
"""

from collections.abc import Sequence

import numpy as np

# (1, e1, e2, e12) over generators e1, e2
G2_BASIS: tuple[tuple[int, int], ...] = ((0, 1), (1, 1), (2, 1), (3, 1))
G2_METRIC: tuple[int, ...] = (1, 1)
G2_NAMES: tuple[str, ...] = ("", "e1", "e2", "e12")

# (1, g0, g1, g2, g01, g02, g21, g012) over generators g0, g1, g2
# g21 = g2 g1 = -(g1 g2), hence the negative sign on bitmap 0b110
G12_BASIS: tuple[tuple[int, int], ...] = (
    (0b000, 1),
    (0b001, 1),
    (0b010, 1),
    (0b100, 1),
    (0b011, 1),
    (0b101, 1),
    (0b110, -1),
    (0b111, 1),
)
G12_METRIC: tuple[int, ...] = (1, -1, -1)
G12_NAMES: tuple[str, ...] = ("", "g0", "g1", "g2", "g01", "g02", "g21", "g012")


def reordering_sign(a: int, b: int, metric: Sequence[int]) -> int:
    """Sign of the product of blades ``a`` and ``b`` relative to blade ``a ^ b``.

    Counts the transpositions needed to bring the product into canonical
    order, then contracts repeated generators with the metric.
    """
    swaps = 0
    shifted = a >> 1
    while shifted:
        swaps += bin(shifted & b).count("1")
        shifted >>= 1
    sign = -1 if swaps & 1 else 1

    common = a & b
    for k, square in enumerate(metric):
        if common >> k & 1:
            sign *= square
    return sign


def build_cayley_table(
    basis: Sequence[tuple[int, int]],
    metric: Sequence[int],
) -> np.ndarray:
    """Build the (n, n, n) Cayley tensor for a signed blade basis."""
    n = len(basis)
    position = {bitmap: (k, sign) for k, (bitmap, sign) in enumerate(basis)}
    table = np.zeros((n, n, n))

    for i, (bi, si) in enumerate(basis):
        for j, (bj, sj) in enumerate(basis):
            k, sk = position[bi ^ bj]
            table[i, j, k] = si * sj * sk * reordering_sign(bi, bj, metric)

    return table


def blade_grades(basis: Sequence[tuple[int, int]]) -> np.ndarray:
    """Grade of each basis element (number of generators in its blade)."""
    return np.array([bin(bitmap).count("1") for bitmap, _ in basis])


def product(a: np.ndarray, b: np.ndarray, table: np.ndarray) -> np.ndarray:
    """Geometric product of coefficient arrays, broadcast over leading axes."""
    return np.einsum("...i,...j,ijk->...k", a, b, table)


def grade_signs(grades: np.ndarray, negated: Sequence[int]) -> np.ndarray:
    """Per-coefficient sign vector negating the listed grades."""
    return np.where(np.isin(grades, negated), -1.0, 1.0)


G2_TABLE = build_cayley_table(G2_BASIS, G2_METRIC)
G12_TABLE = build_cayley_table(G12_BASIS, G12_METRIC)
G2_GRADES = blade_grades(G2_BASIS)
G12_GRADES = blade_grades(G12_BASIS)
