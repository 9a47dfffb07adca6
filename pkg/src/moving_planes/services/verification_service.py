"""Randomized invariant suites checking every module against its oracles."""

import logging
import math
from collections.abc import Callable
from itertools import product as cartesian
from typing import NamedTuple, Optional

import numpy as np
from pydantic import BaseModel

from moving_planes.config import Settings, get_settings
from moving_planes.core import ga2, hyperbolic, kinematics, matrix_rep, spacetime, transforms
from moving_planes.core.algebra import G2_TABLE, G12_METRIC, product
from moving_planes.core.exceptions import (
    DegenerateDError,
    DegenerateDirectionError,
    MovingPlanesError,
    SuperluminalError,
)
from moving_planes.core.models import (
    G2Multivector,
    G12Multivector,
    HyperbolicNumber,
    Idempotent,
    InvariantResult,
    MinkowskiVector,
    OrientedFrame,
    UnitVector2,
    Vector2,
    Velocity,
    VerificationReport,
    VerifySuite,
    ZeroScalarClass,
)

logger = logging.getLogger(__name__)

Sample = tuple[float, dict[str, float]]
Check = Callable[[np.random.Generator], Sample]
BatchCheck = Callable[[np.random.Generator, int], Sample]


class Invariant(NamedTuple):
    suite: VerifySuite
    name: str
    threshold: float
    check: Check | BatchCheck
    samples: Optional[int] = None  # fixed sample count for exhaustive checks
    batched: bool = False  # check draws all samples at once and reports the worst


def _flatten(prefix: str, value, out: dict[str, float]) -> None:
    if isinstance(value, BaseModel):
        value = value.model_dump()
    if isinstance(value, dict):
        for key, item in value.items():
            _flatten(f"{prefix}.{key}" if prefix else str(key), item, out)
    elif isinstance(value, (list, tuple)):
        for index, item in enumerate(value):
            _flatten(f"{prefix}[{index}]", item, out)
    elif isinstance(value, (int, float)) and not isinstance(value, bool):
        out[prefix] = float(value)


def _context(**values) -> dict[str, float]:
    out: dict[str, float] = {}
    for name, value in values.items():
        _flatten(name, value, out)
    return out


# Random inputs

def _g2(rng: np.random.Generator, scale: float = 1.0) -> G2Multivector:
    return G2Multivector.from_array(rng.uniform(-scale, scale, 4))


def _zero_scalar(rng: np.random.Generator, norm: float) -> G2Multivector:
    direction = rng.normal(size=3)
    direction /= np.linalg.norm(direction)
    v1, v2, b = direction * norm
    return G2Multivector(v1=v1, v2=v2, b=b)


def _g12(rng: np.random.Generator, scale: float = 1.0) -> G12Multivector:
    return G12Multivector.from_array(rng.uniform(-scale, scale, 8))


def _unit(rng: np.random.Generator) -> UnitVector2:
    return UnitVector2.from_angle(rng.uniform(-math.pi, math.pi))


def _vector(rng: np.random.Generator, scale: float = 1.0) -> Vector2:
    v1, v2 = rng.uniform(-scale, scale, 2)
    return Vector2(v1=v1, v2=v2)


def _frame(rng: np.random.Generator, max_phi: float = 3.0) -> OrientedFrame:
    return OrientedFrame(a=_unit(rng), phi=rng.uniform(0.0, max_phi))


def _timelike(rng: np.random.Generator, max_phi: float = 1.5) -> MinkowskiVector:
    return spacetime.psi(_frame(rng, max_phi).bivector())


def _hyperbolic(rng: np.random.Generator, scale: float = 2.0) -> HyperbolicNumber:
    x, y = rng.uniform(-scale, scale, 2)
    return HyperbolicNumber(x=x, y=y)


def _off_null(rng: np.random.Generator) -> HyperbolicNumber:
    while True:
        w = _hyperbolic(rng, 5.0)
        if abs(w.x * w.x - w.y * w.y) > 0.05 * (w.x * w.x + w.y * w.y):
            return w


def _triple(rng: np.random.Generator) -> tuple[MinkowskiVector, MinkowskiVector, MinkowskiVector]:
    """Random (u, v, w) with a well-conditioned D = (w - v) ^ u."""
    while True:
        u, v, w = _timelike(rng), _timelike(rng), _timelike(rng)
        d = spacetime.mink_outer(w - v, u)
        norm_sq = float((d.coefficients ** 2).sum())
        if norm_sq > 1e-6 and abs((d * d).scalar_part) > 1e-3 * norm_sq:
            return u, v, w


def _relative(error: float, *magnitudes: float) -> float:
    return error / max([1.0, *magnitudes])


# Table oracle: products of generator words, sorted by adjacent swaps

_G12_WORDS = ((), (0,), (1,), (2,), (0, 1), (0, 2), (2, 1), (0, 1, 2))


def _word_product(left: tuple[int, ...], right: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    word = list(left + right)
    sign = 1
    changed = True
    while changed:
        changed = False
        for k in range(len(word) - 1):
            if word[k] > word[k + 1]:
                word[k], word[k + 1] = word[k + 1], word[k]
                sign = -sign
                changed = True
            elif word[k] == word[k + 1]:
                sign *= G12_METRIC[word[k]]
                del word[k:k + 2]
                changed = True
                break
    return sign, tuple(word)


def _word_basis() -> dict[tuple[int, ...], tuple[int, int]]:
    basis = {}
    for index, word in enumerate(_G12_WORDS):
        sign, canonical = _word_product(word, ())
        basis[canonical] = (index, sign)
    return basis


def _basis_element(cls, index: int):
    values = np.zeros(len(cls.model_fields))
    values[index] = 1.0
    return cls.from_array(values)


# Expected G2 basis products over (1, e1, e2, i): (sign, index)
_G2_PRODUCTS = (
    ((1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 1), (1, 0), (1, 3), (1, 2)),
    ((1, 2), (-1, 3), (1, 0), (-1, 1)),
    ((1, 3), (-1, 2), (1, 1), (-1, 0)),
)


class VerificationService:
    """Run the randomized invariant suites with deterministic seeding."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()
        self.invariants = self._build_invariants()

    def run(
        self,
        suite: VerifySuite = VerifySuite.ALL,
        seed: Optional[int] = None,
        count: Optional[int] = None,
    ) -> VerificationReport:
        """
        Run one suite (or all of them).

        Args:
            suite: Suite to run.
            seed: Base seed; each invariant draws from its own stream.
            count: Random samples per invariant.

        Returns:
            A report with the max error of every invariant.
        """
        seed = self.settings.default_seed if seed is None else seed
        count = self.settings.default_count if count is None else count
        logger.info(f"Running suite '{suite.value}' with seed={seed}, count={count}")

        report = VerificationReport(suite=suite, seed=seed, count=count)
        for index, invariant in enumerate(self.invariants):
            if suite is not VerifySuite.ALL and invariant.suite is not suite:
                continue
            rng = np.random.default_rng([seed, index])
            report.results.append(self._run_invariant(invariant, rng, count))

        logger.info(f"Suite '{suite.value}': {len(report.failures)} of {len(report.results)} failed")
        return report

    def _run_invariant(
        self, invariant: Invariant, rng: np.random.Generator, count: int
    ) -> InvariantResult:
        samples = invariant.samples or count
        max_error = 0.0
        worst: Optional[dict[str, float]] = None
        message = None

        for _ in range(1 if invariant.batched else samples):
            try:
                error, context = invariant.check(rng, samples) if invariant.batched else invariant.check(rng)
            except MovingPlanesError as e:
                error, context, message = math.inf, {}, f"{type(e).__name__}: {e}"
            if math.isnan(error):
                error = math.inf
            if error > max_error or worst is None:
                max_error, worst = max(error, max_error), context
            if error == math.inf:
                break

        passed = max_error <= invariant.threshold
        if not passed:
            logger.warning(f"Invariant '{invariant.name}' failed: max error {max_error!r}")
        return InvariantResult(
            suite=invariant.suite,
            name=invariant.name,
            samples=samples,
            max_error=max_error,
            threshold=invariant.threshold,
            passed=passed,
            counterexample=None if passed else worst,
            message=None if passed else message,
        )

    def _build_invariants(self) -> list[Invariant]:
        tol = self.settings.tolerance
        core, hyp, trans, kin, st, mat = (
            VerifySuite.CORE,
            VerifySuite.HYPERBOLIC,
            VerifySuite.TRANSFORMS,
            VerifySuite.KINEMATICS,
            VerifySuite.SPACETIME,
            VerifySuite.MATRIX,
        )
        return [
            Invariant(core, "basis product table", 0.0, self._check_g2_table, samples=1),
            Invariant(core, "gp associativity", 1e-12, self._check_g2_associativity),
            Invariant(core, "gp bilinearity", 1e-12, self._check_g2_bilinearity),
            Invariant(core, "sym + antisym = gp", 1e-14, self._check_sym_antisym),
            Invariant(core, "nilpotent square vanishes", tol, self._check_nilpotent),
            Invariant(core, "classification follows the sign of A^2", 0.5, self._check_classification),
            Invariant(core, "exp matches the power series", 1e-10, self._check_exp_series),
            Invariant(core, "triple product over basis triples", 1e-15, self._check_triple_basis, samples=1),
            Invariant(core, "triple product equals -det", 1e-12, self._check_triple_random),
            Invariant(core, "grade projections reconstruct", 0.0, self._check_grades),
            Invariant(hyp, "hmul commutativity", 0.0, self._check_hmul_commutative),
            Invariant(hyp, "hmul associativity", 1e-12, self._check_hmul_associative),
            Invariant(hyp, "hmul distributivity", 1e-12, self._check_hmul_distributive),
            Invariant(hyp, "polar round trip", 1e-12, self._check_polar_round_trip),
            Invariant(hyp, "polar product adds angles", 1e-11, self._check_polar_product),
            Invariant(hyp, "modulus is multiplicative", 1e-10, self._check_modulus),
            Invariant(hyp, "distance from the modulus", 1e-12, self._check_distance),
            Invariant(hyp, "zero divisors", 0.0, self._check_zero_divisors),
            Invariant(trans, "rotation preserves squares", 1e-12, self._check_rotation_norm),
            Invariant(trans, "rotation keeps vectors", 1e-12, self._check_rotation_grade),
            Invariant(trans, "rotor takes a to b", 1e-12, self._check_rotor),
            Invariant(trans, "active boost is an automorphism", 1e-11, self._check_boost_automorphism),
            Invariant(trans, "boost fixes its direction", 1e-12, self._check_boost_direction),
            Invariant(trans, "bivector pickup equals -sinh", 1e-12, self._check_bivector_pickup),
            Invariant(trans, "boost preserves squares", 1e-11, self._check_boost_square),
            Invariant(trans, "boosted pair anticommutes", 1e-11, self._check_boosted_pair),
            Invariant(trans, "frame classification round trip", 1e-10, self._check_frame_round_trip),
            Invariant(trans, "relative basis is orthonormal", 1e-10, self._check_relative_basis),
            Invariant(kin, "cosh(omega) is the scalar of e^{-phi a} e^{rho b}", 1e-11, self._check_compose_cosh),
            Invariant(kin, "e^{-phi a} e^{rho b} = cosh(omega)(1 + v_w)", 1e-11, self._check_compose_product),
            Invariant(kin, "direction is a unit relative vector", 1e-10, self._check_direction),
            Invariant(kin, "v_w = c tanh(omega)", 1e-10, self._check_vw_tanh),
            Invariant(kin, "reciprocity", 1e-15, self._check_reciprocity),
            Invariant(kin, "passive sandwich", 1e-9, self._check_passive_sandwich),
            Invariant(kin, "passive cosh(Omega) formula", 1e-10, self._check_passive_cosh),
            Invariant(kin, "velocity addition round trip", 1e-10, self._check_velocity_round_trip),
            Invariant(kin, "velocity addition stays subluminal", 0.5, self._check_subluminal),
            Invariant(kin, "gamma factor equals cosh(phi)", 1e-12, self._check_gamma),
            Invariant(kin, "collinear active and passive agree", 1e-10, self._check_collinear),
            Invariant(st, "basis product table", 0.0, self._check_g12_table, samples=1),
            Invariant(st, "gp12 associativity", 1e-12, self._check_g12_associativity),
            Invariant(st, "pseudoscalar is central", 0.0, self._check_central),
            Invariant(st, "even embedding is a homomorphism", 1e-12, self._check_embedding),
            Invariant(st, "duality commutes with boosts", 1e-11, self._check_psi_naturality),
            Invariant(st, "duality gives unit timelike vectors", 1e-10, self._check_psi_unit),
            Invariant(st, "Minkowski inner product is the gamma factor", 1e-11, self._check_vdotu),
            Invariant(st, "G2 and G12 compositions agree", 1e-10, self._check_dual_route),
            Invariant(st, "recomputed v.w is observer independent", 1e-10, self._check_observer),
            Invariant(st, "D split reconstructs v and w", 1e-10, self._check_d_split),
            Invariant(st, "w ^ D = v ^ D", 1e-10, self._check_d_wedge),
            Invariant(st, "(w.D)^2 = (v.D)^2 < 0", 1e-10, self._check_d_squares),
            Invariant(st, "parallel boost takes v to w", 1e-9, self._check_parallel_boost),
            Invariant(st, "parallel rotor scalar is cosh(Omega)", 1e-9, self._check_parallel_cosh),
            Invariant(st, "coplanar parallel rotor is the full rotor", 1e-10, self._check_coplanar),
            Invariant(st, "involutions respect products", 1e-12, self._check_involution_products),
            Invariant(st, "involutions square to the identity", 0.0, self._check_involution_squares),
            Invariant(
                mat, "matrix representation is multiplicative", 1e-12, self._check_matrix_homomorphism, batched=True
            ),
            Invariant(mat, "matrix round trip", 1e-15, self._check_matrix_round_trip),
            Invariant(mat, "spectral route matches the closed form", 1e-14, self._check_spectral),
            Invariant(mat, "idempotent relations", 0.0, self._check_idempotents, samples=1),
            Invariant(mat, "e1-conjugate is an involution", 0.0, self._check_e1_conjugate),
            Invariant(mat, "complexified representation is multiplicative", 1e-11, self._check_matrix_f),
            Invariant(mat, "involutions map to matrix involutions", 1e-14, self._check_matrix_involutions),
            Invariant(mat, "active boost through the matrix oracle", 1e-11, self._check_boost_oracle),
        ]

    # core

    @staticmethod
    def _check_g2_table(rng: np.random.Generator) -> Sample:
        error = 0.0
        for i, j in cartesian(range(4), repeat=2):
            sign, k = _G2_PRODUCTS[i][j]
            expected = _basis_element(G2Multivector, k) * float(sign)
            actual = _basis_element(G2Multivector, i) * _basis_element(G2Multivector, j)
            error = max(error, actual.max_abs_diff(expected))
        return error, {}

    @staticmethod
    def _check_g2_associativity(rng: np.random.Generator) -> Sample:
        a, b, c = _g2(rng), _g2(rng), _g2(rng)
        return ((a * b) * c).max_abs_diff(a * (b * c)), _context(a=a, b=b, c=c)

    @staticmethod
    def _check_g2_bilinearity(rng: np.random.Generator) -> Sample:
        a, b, c = _g2(rng), _g2(rng), _g2(rng)
        alpha = rng.uniform(-2.0, 2.0)
        lhs = (a * alpha + b) * c
        rhs = (a * c) * alpha + b * c
        return lhs.max_abs_diff(rhs), _context(a=a, b=b, c=c, alpha=alpha)

    @staticmethod
    def _check_sym_antisym(rng: np.random.Generator) -> Sample:
        a, b = _g2(rng), _g2(rng)
        return (ga2.sym(a, b) + ga2.antisym(a, b)).max_abs_diff(ga2.gp(a, b)), _context(a=a, b=b)

    def _check_nilpotent(self, rng: np.random.Generator) -> Sample:
        r = rng.uniform(0.1, 2.0)
        alpha = rng.uniform(-math.pi, math.pi)
        sign = rng.choice([-1.0, 1.0])
        a = G2Multivector(v1=r * math.cos(alpha), v2=r * math.sin(alpha), b=sign * r)
        if ga2.classify_zero_scalar(a, self.settings.tolerance) is not ZeroScalarClass.NILPOTENT:
            return math.inf, _context(a=a)
        return _relative((a * a).max_abs(), r * r), _context(a=a)

    def _check_classification(self, rng: np.random.Generator) -> Sample:
        a = _zero_scalar(rng, rng.uniform(0.1, 3.0))
        square = a.square_zero_scalar
        if abs(square) < 1e-6:
            return 0.0, {}
        expected = ZeroScalarClass.RELATIVE_VECTOR if square > 0 else ZeroScalarClass.RELATIVE_BIVECTOR
        actual = ga2.classify_zero_scalar(a, self.settings.tolerance)
        return (0.0 if actual is expected else 1.0), _context(a=a)

    def _check_exp_series(self, rng: np.random.Generator) -> Sample:
        a = _zero_scalar(rng, rng.uniform(0.0, 3.0))
        exact = ga2.exp_zero_scalar(a, self.settings.tolerance)
        series = ga2.exp_series(a, self.settings.series_terms)
        return _relative(exact.max_abs_diff(series), exact.max_abs()), _context(a=a)

    @staticmethod
    def _check_triple_basis(rng: np.random.Generator) -> Sample:
        basis = (ga2.E1, ga2.E2, ga2.I)
        rows = np.eye(3)
        error = 0.0
        for i, j, k in cartesian(range(3), repeat=3):
            expected = -np.linalg.det(np.array([rows[i], rows[j], rows[k]]))
            error = max(error, abs(ga2.triple_sym(basis[i], basis[j], basis[k]) - expected))
        return error, {}

    @staticmethod
    def _check_triple_random(rng: np.random.Generator) -> Sample:
        a, b, c = (_zero_scalar(rng, rng.uniform(0.1, 2.0)) for _ in range(3))
        rows = np.array([[x.v1, x.v2, x.b] for x in (a, b, c)])
        return abs(ga2.triple_sym(a, b, c) + np.linalg.det(rows)), _context(a=a, b=b, c=c)

    @staticmethod
    def _check_grades(rng: np.random.Generator) -> Sample:
        g = _g2(rng)
        total = ga2.grade(g, 0) + ga2.grade(g, 1) + ga2.grade(g, 2)
        return total.max_abs_diff(g), _context(g=g)

    # hyperbolic

    @staticmethod
    def _check_hmul_commutative(rng: np.random.Generator) -> Sample:
        w1, w2 = _hyperbolic(rng), _hyperbolic(rng)
        return hyperbolic.hmul(w1, w2).max_abs_diff(hyperbolic.hmul(w2, w1)), _context(w1=w1, w2=w2)

    @staticmethod
    def _check_hmul_associative(rng: np.random.Generator) -> Sample:
        w1, w2, w3 = _hyperbolic(rng), _hyperbolic(rng), _hyperbolic(rng)
        lhs = hyperbolic.hmul(hyperbolic.hmul(w1, w2), w3)
        rhs = hyperbolic.hmul(w1, hyperbolic.hmul(w2, w3))
        return lhs.max_abs_diff(rhs), _context(w1=w1, w2=w2, w3=w3)

    @staticmethod
    def _check_hmul_distributive(rng: np.random.Generator) -> Sample:
        w1, w2, w3 = _hyperbolic(rng), _hyperbolic(rng), _hyperbolic(rng)
        lhs = hyperbolic.hmul(w1, w2 + w3)
        rhs = hyperbolic.hmul(w1, w2) + hyperbolic.hmul(w1, w3)
        return lhs.max_abs_diff(rhs), _context(w1=w1, w2=w2, w3=w3)

    @staticmethod
    def _check_polar_round_trip(rng: np.random.Generator) -> Sample:
        w = _off_null(rng)
        back = hyperbolic.from_polar(hyperbolic.polar(w))
        return _relative(back.max_abs_diff(w), abs(w.x), abs(w.y)), _context(w=w)

    @staticmethod
    def _check_polar_product(rng: np.random.Generator) -> Sample:
        w1, w2 = _off_null(rng), _off_null(rng)
        combined = hyperbolic.polar_product(hyperbolic.polar(w1), hyperbolic.polar(w2))
        expected = hyperbolic.hmul(w1, w2)
        error = hyperbolic.from_polar(combined).max_abs_diff(expected)
        return _relative(error, abs(expected.x), abs(expected.y)), _context(w1=w1, w2=w2)

    @staticmethod
    def _check_modulus(rng: np.random.Generator) -> Sample:
        w1, w2 = _hyperbolic(rng), _hyperbolic(rng)
        lhs = hyperbolic.hmodulus_sq(hyperbolic.hmul(w1, w2))
        rhs = hyperbolic.hmodulus_sq(w1) * hyperbolic.hmodulus_sq(w2)
        scale = (w1.x ** 2 + w1.y ** 2) * (w2.x ** 2 + w2.y ** 2)
        return _relative(abs(lhs - rhs), scale), _context(w1=w1, w2=w2)

    @staticmethod
    def _check_distance(rng: np.random.Generator) -> Sample:
        w1, w2 = _hyperbolic(rng), _hyperbolic(rng)
        d12 = hyperbolic.hdistance(w1, w2)
        error = max(
            abs(d12 - hyperbolic.hdistance(w2, w1)),
            abs(d12 ** 2 - hyperbolic.hmodulus_sq(w1 - w2)),
            hyperbolic.hdistance(w1, w1),
        )
        return error, _context(w1=w1, w2=w2)

    @staticmethod
    def _check_zero_divisors(rng: np.random.Generator) -> Sample:
        a, b = rng.uniform(-5.0, 5.0, 2)
        product = hyperbolic.hmul(HyperbolicNumber(x=a, y=a), HyperbolicNumber(x=b, y=-b))
        return max(abs(product.x), abs(product.y)), _context(a=a, b=b)

    # transforms

    @staticmethod
    def _check_rotation_norm(rng: np.random.Generator) -> Sample:
        x = _vector(rng, 2.0)
        theta = rng.uniform(-math.pi, math.pi)
        rotated = transforms.rotate(x, theta)
        square = x.dot(x)
        return _relative(abs(rotated.dot(rotated) - square), square), _context(x=x, theta=theta)

    @staticmethod
    def _check_rotation_grade(rng: np.random.Generator) -> Sample:
        x = _vector(rng, 2.0)
        theta = rng.uniform(-math.pi, math.pi)
        rotated = transforms.rotate_multivector(x.to_multivector(), theta)
        return max(abs(rotated.s), abs(rotated.b)), _context(x=x, theta=theta)

    def _check_rotor(self, rng: np.random.Generator) -> Sample:
        a = _unit(rng)
        b = _unit(rng)
        while 1.0 + a.dot(b) < 1e-3:
            b = _unit(rng)
        r = transforms.rotor_between(a, b, self.settings.tolerance)
        image = r * a.to_multivector() * ~r
        return image.max_abs_diff(b.to_multivector()), _context(a=a, b=b)

    @staticmethod
    def _check_boost_automorphism(rng: np.random.Generator) -> Sample:
        g1, g2 = _g2(rng), _g2(rng)
        a, phi = _unit(rng), rng.uniform(-3.0, 3.0)
        lhs = transforms.active_boost(g1 * g2, a, phi)
        rhs = transforms.active_boost(g1, a, phi) * transforms.active_boost(g2, a, phi)
        return _relative(lhs.max_abs_diff(rhs), lhs.max_abs()), _context(g1=g1, g2=g2, a=a, phi=phi)

    @staticmethod
    def _check_boost_direction(rng: np.random.Generator) -> Sample:
        a, phi = _unit(rng), rng.uniform(-3.0, 3.0)
        image = transforms.active_boost(a.to_multivector(), a, phi)
        return _relative(image.max_abs_diff(a.to_multivector()), math.cosh(phi)), _context(a=a, phi=phi)

    @staticmethod
    def _check_bivector_pickup(rng: np.random.Generator) -> Sample:
        a, phi = _unit(rng), rng.uniform(-3.0, 3.0)
        image = transforms.active_boost(a.to_multivector() * ga2.I, a, phi)
        return _relative(abs(image.b + math.sinh(phi)), math.cosh(phi)), _context(a=a, phi=phi)

    @staticmethod
    def _check_boost_square(rng: np.random.Generator) -> Sample:
        x = _vector(rng).to_multivector()
        a, phi = _unit(rng), rng.uniform(-3.0, 3.0)
        image = transforms.active_boost(x, a, phi)
        error = (image * image).max_abs_diff(x * x)
        return _relative(error, math.cosh(phi) ** 2), _context(x=x, a=a, phi=phi)

    @staticmethod
    def _check_boosted_pair(rng: np.random.Generator) -> Sample:
        a, phi = _unit(rng), rng.uniform(-3.0, 3.0)
        p = transforms.active_boost(a.to_multivector(), a, phi)
        q = transforms.active_boost(a.to_multivector() * ga2.I, a, phi)
        return _relative((p * q + q * p).max_abs(), math.cosh(phi) ** 2), _context(a=a, phi=phi)

    def _check_frame_round_trip(self, rng: np.random.Generator) -> Sample:
        orientation = int(rng.choice([-1, 1]))
        a = _unit(rng)
        phi = 0.0 if rng.random() < 0.05 else orientation * rng.uniform(0.0, 3.0)
        frame = OrientedFrame(orientation=orientation, a=a, phi=phi)
        back = transforms.classify_unit_minus_one(frame.bivector(), self.settings.tolerance)
        error = abs(back.phi - frame.phi) + abs(back.orientation - frame.orientation)
        if phi != 0.0:
            error = max(error, abs(back.a.v1 - a.v1), abs(back.a.v2 - a.v2))
        error = max(error, back.bivector().max_abs_diff(frame.bivector()))
        return error, _context(frame=frame)

    @staticmethod
    def _check_relative_basis(rng: np.random.Generator) -> Sample:
        a, phi = _unit(rng), rng.uniform(-3.0, 3.0)
        basis = transforms.relative_basis(a, phi)
        e1p, e2p, j = basis.e1p, basis.e2p, basis.j
        error = max(
            (e1p * e1p).max_abs_diff(ga2.ONE),
            (e2p * e2p).max_abs_diff(ga2.ONE),
            (e1p * e2p + e2p * e1p).max_abs(),
            (e1p * e2p).max_abs_diff(j),
            (j * j).max_abs_diff(-ga2.ONE),
        )
        return _relative(error, math.cosh(phi) ** 2), _context(a=a, phi=phi)

    # kinematics

    @staticmethod
    def _exponential_product(j: OrientedFrame, k: OrientedFrame) -> G2Multivector:
        return ga2.vector_exp(j.a, -j.phi) * ga2.vector_exp(k.a, k.phi)

    def _check_compose_cosh(self, rng: np.random.Generator) -> Sample:
        j, k = _frame(rng), _frame(rng)
        result = kinematics.compose_frames(j, k, self.settings.tolerance)
        oracle = self._exponential_product(j, k)
        return _relative(abs(oracle.s - result.cosh_omega), oracle.max_abs()), _context(j=j, k=k)

    def _check_compose_product(self, rng: np.random.Generator) -> Sample:
        j, k = _frame(rng), _frame(rng)
        result = kinematics.compose_frames(j, k, self.settings.tolerance)
        oracle = self._exponential_product(j, k)
        error = oracle.max_abs_diff((ga2.ONE + result.vw) * result.cosh_omega)
        return _relative(error, oracle.max_abs()), _context(j=j, k=k)

    def _check_direction(self, rng: np.random.Generator) -> Sample:
        j, k = _frame(rng), _frame(rng)
        c = kinematics.compose_frames(j, k, self.settings.tolerance).c_direction
        if ga2.classify_zero_scalar(c, self.settings.tolerance) is not ZeroScalarClass.RELATIVE_VECTOR:
            return math.inf, _context(j=j, k=k)
        return abs(c.square_zero_scalar - 1.0), _context(j=j, k=k)

    def _check_vw_tanh(self, rng: np.random.Generator) -> Sample:
        j, k = _frame(rng), _frame(rng)
        result = kinematics.compose_frames(j, k, self.settings.tolerance)
        return result.vw.max_abs_diff(result.c_direction * math.tanh(result.omega)), _context(j=j, k=k)

    def _check_reciprocity(self, rng: np.random.Generator) -> Sample:
        j, k = _frame(rng), _frame(rng)
        forward = kinematics.compose_frames(j, k, self.settings.tolerance)
        backward = kinematics.compose_frames(k, j, self.settings.tolerance)
        return (forward.vw + backward.vw).max_abs(), _context(j=j, k=k)

    def _passive_pair(self, rng: np.random.Generator):
        while True:
            j, k = _frame(rng), _frame(rng)
            uv, uw = Velocity.from_vector(j.velocity), Velocity.from_vector(k.velocity)
            try:
                boost = kinematics.passive_boost_factor(uv, j.phi, uw, k.phi)
            except DegenerateDirectionError:
                continue
            return j, k, uv, uw, boost

    def _check_passive_sandwich(self, rng: np.random.Generator) -> Sample:
        j, k, _, _, boost = self._passive_pair(rng)
        sandwich = kinematics.compose_passive(j.a, j.phi, boost.direction, boost.omega)
        target = ga2.vector_exp(k.a, k.phi)
        return _relative(sandwich.max_abs_diff(target), target.max_abs()), _context(j=j, k=k)

    def _check_passive_cosh(self, rng: np.random.Generator) -> Sample:
        j, k, uv, _, boost = self._passive_pair(rng)
        error = max(
            abs(boost.cosh_omega - math.cosh(boost.omega)),
            abs(kinematics.composed_cosh(j.phi, boost.omega, uv, boost.uvw) - math.cosh(k.phi)),
        )
        return _relative(error, math.cosh(k.phi)), _context(j=j, k=k)

    def _check_velocity_round_trip(self, rng: np.random.Generator) -> Sample:
        j, k, uv, uw, boost = self._passive_pair(rng)
        recovered = kinematics.velocity_add(uv, boost.uvw, boost.direction, boost.omega)
        return max(abs(recovered.v1 - uw.v1), abs(recovered.v2 - uw.v2)), _context(j=j, k=k)

    @staticmethod
    def _check_subluminal(rng: np.random.Generator) -> Sample:
        direction = _unit(rng)
        speed = rng.uniform(0.0, 0.999)
        uv = Velocity.of(direction.v1 * speed, direction.v2 * speed)
        d = _unit(rng)
        omega = rng.uniform(-5.0, 5.0)
        uvw = Velocity.of(d.v1 * math.tanh(omega), d.v2 * math.tanh(omega))
        try:
            kinematics.velocity_add(uv, uvw, d, omega)
        except SuperluminalError:
            return 1.0, _context(uv=uv, d=d, omega=omega)
        return 0.0, {}

    @staticmethod
    def _check_gamma(rng: np.random.Generator) -> Sample:
        frame = _frame(rng)
        gamma = kinematics.gamma_factor(frame.velocity)
        return _relative(abs(gamma - math.cosh(frame.phi)), math.cosh(frame.phi)), _context(frame=frame)

    def _check_collinear(self, rng: np.random.Generator) -> Sample:
        a = _unit(rng)
        b = a if rng.random() < 0.5 else -a
        phi, rho = rng.uniform(0.0, 3.0), rng.uniform(0.0, 3.0)
        j, k = OrientedFrame(a=a, phi=phi), OrientedFrame(a=b, phi=rho)
        uv, uw = Velocity.from_vector(j.velocity), Velocity.from_vector(k.velocity)
        try:
            boost = kinematics.passive_boost_factor(uv, phi, uw, rho)
        except DegenerateDirectionError:
            return 0.0, {}
        vw = kinematics.compose_frames(j, k, self.settings.tolerance).vw
        error = max(abs(vw.v1 - boost.uvw.v1), abs(vw.v2 - boost.uvw.v2), abs(vw.b))
        return error, _context(j=j, k=k)

    # spacetime

    @staticmethod
    def _check_g12_table(rng: np.random.Generator) -> Sample:
        basis = _word_basis()
        error = 0.0
        for i, j in cartesian(range(8), repeat=2):
            sign, word = _word_product(_G12_WORDS[i], _G12_WORDS[j])
            k, basis_sign = basis[word]
            expected = _basis_element(G12Multivector, k) * float(sign * basis_sign)
            actual = _basis_element(G12Multivector, i) * _basis_element(G12Multivector, j)
            error = max(error, actual.max_abs_diff(expected))
        return error, {}

    @staticmethod
    def _check_g12_associativity(rng: np.random.Generator) -> Sample:
        a, b, c = _g12(rng), _g12(rng), _g12(rng)
        return ((a * b) * c).max_abs_diff(a * (b * c)), _context(a=a, b=b, c=c)

    @staticmethod
    def _check_central(rng: np.random.Generator) -> Sample:
        f = _g12(rng)
        s = spacetime.PSEUDOSCALAR
        return (s * f).max_abs_diff(f * s), _context(f=f)

    @staticmethod
    def _check_embedding(rng: np.random.Generator) -> Sample:
        a, b = _g2(rng), _g2(rng)
        lhs = spacetime.embed_even(a * b)
        rhs = spacetime.embed_even(a) * spacetime.embed_even(b)
        return lhs.max_abs_diff(rhs), _context(a=a, b=b)

    def _check_psi_naturality(self, rng: np.random.Generator) -> Sample:
        a, phi = _unit(rng), rng.uniform(-3.0, 3.0)
        lhs = spacetime.psi(transforms.active_boost(ga2.I, a, phi), self.settings.tolerance)
        rhs = spacetime.boost_vector(spacetime.to_vector(spacetime.GAMMA0), a, phi)
        return _relative(lhs.max_abs_diff(rhs), math.cosh(phi)), _context(a=a, phi=phi)

    def _check_psi_unit(self, rng: np.random.Generator) -> Sample:
        frame = _frame(rng)
        r = spacetime.psi(frame.bivector(), self.settings.tolerance)
        return _relative(abs(r.square - 1.0), math.cosh(frame.phi) ** 2), _context(frame=frame)

    def _check_vdotu(self, rng: np.random.Generator) -> Sample:
        u, v = _timelike(rng), _timelike(rng)
        uv = spacetime.relative_velocity_bivector(u, v, self.settings.tolerance)
        speed_sq = (uv * uv).scalar_part
        dot = spacetime.mink_inner(u, v)
        return _relative(abs(dot - 1.0 / math.sqrt(1.0 - speed_sq)), dot), _context(u=u, v=v)

    def _check_dual_route(self, rng: np.random.Generator) -> Sample:
        tol = self.settings.tolerance
        j, k = _frame(rng, 2.0), _frame(rng, 2.0)
        g2_route = kinematics.compose_frames(j, k, tol)
        u = spacetime.to_vector(spacetime.GAMMA0)
        g12_route = spacetime.recompute_composition(
            u, spacetime.psi(j.bivector(), tol), spacetime.psi(k.bivector(), tol), tol
        )
        error = max(
            abs(g12_route.v_dot_w - g2_route.cosh_omega),
            g12_route.vw.max_abs_diff(spacetime.embed_even(g2_route.vw)),
        )
        return _relative(error, g2_route.cosh_omega), _context(j=j, k=k)

    def _check_observer(self, rng: np.random.Generator) -> Sample:
        u, v, w = _timelike(rng), _timelike(rng), _timelike(rng)
        result = spacetime.recompute_composition(u, v, w, self.settings.tolerance)
        dot = spacetime.mink_inner(v, w)
        return _relative(abs(result.v_dot_w - dot), dot), _context(u=u, v=v, w=w)

    def _check_d_split(self, rng: np.random.Generator) -> Sample:
        u, v, w = _triple(rng)
        split = spacetime.d_split(u, v, w, self.settings.tolerance)
        error = max(
            (split.w_par + split.w_perp).max_abs_diff(w),
            (split.v_par + split.v_perp).max_abs_diff(v),
        )
        return _relative(error, w.t, v.t), _context(u=u, v=v, w=w)

    @staticmethod
    def _check_d_wedge(rng: np.random.Generator) -> Sample:
        u, v, w = _triple(rng)
        d = spacetime.mink_outer(w - v, u)
        w_wedge = (w.to_multivector() * d).grade_part(3)
        v_wedge = (v.to_multivector() * d).grade_part(3)
        return _relative(w_wedge.max_abs_diff(v_wedge), d.max_abs() * w.t), _context(u=u, v=v, w=w)

    @staticmethod
    def _check_d_squares(rng: np.random.Generator) -> Sample:
        u, v, w = _triple(rng)
        d = spacetime.mink_outer(w - v, u)
        w_dot = (w.to_multivector() * d).grade_part(1)
        v_dot = (v.to_multivector() * d).grade_part(1)
        w_sq, v_sq = (w_dot * w_dot).scalar_part, (v_dot * v_dot).scalar_part
        if not v_sq < 0:
            return math.inf, _context(u=u, v=v, w=w)
        return _relative(abs(w_sq - v_sq), abs(v_sq)), _context(u=u, v=v, w=w)

    def _check_parallel_boost(self, rng: np.random.Generator) -> Sample:
        u, v, w = _triple(rng)
        image = spacetime.parallel_boost(u, v, w, v, self.settings.tolerance)
        return _relative(image.max_abs_diff(w), w.t), _context(u=u, v=v, w=w)

    def _check_parallel_cosh(self, rng: np.random.Generator) -> Sample:
        tol = self.settings.tolerance
        while True:
            j, k = _frame(rng, 1.5), _frame(rng, 1.5)
            uv, uw = Velocity.from_vector(j.velocity), Velocity.from_vector(k.velocity)
            try:
                boost = kinematics.passive_boost_factor(uv, j.phi, uw, k.phi)
                rotor = spacetime.parallel_rotor(
                    spacetime.to_vector(spacetime.GAMMA0),
                    spacetime.psi(j.bivector(), tol),
                    spacetime.psi(k.bivector(), tol),
                    tol,
                )
            except (DegenerateDirectionError, DegenerateDError):
                continue
            break
        return _relative(abs(rotor.scalar_part - boost.cosh_omega), boost.cosh_omega), _context(j=j, k=k)

    def _check_coplanar(self, rng: np.random.Generator) -> Sample:
        tol = self.settings.tolerance
        a = _unit(rng)
        b = a if rng.random() < 0.5 else -a
        phi, rho = rng.uniform(0.0, 1.5), rng.uniform(0.0, 1.5)
        if b == a and abs(phi - rho) < 1e-3:
            return 0.0, {}
        v = spacetime.psi(OrientedFrame(a=a, phi=phi).bivector(), tol)
        w = spacetime.psi(OrientedFrame(a=b, phi=rho).bivector(), tol)
        rotor = spacetime.parallel_rotor(spacetime.to_vector(spacetime.GAMMA0), v, w, tol)
        full = w.to_multivector() * v.to_multivector()
        return _relative(rotor.max_abs_diff(full), full.max_abs()), _context(a=a, phi=phi, rho=rho)

    @staticmethod
    def _check_involution_products(rng: np.random.Generator) -> Sample:
        f, g = _g12(rng), _g12(rng)
        error = max(
            spacetime.main_involution(f * g).max_abs_diff(
                spacetime.main_involution(f) * spacetime.main_involution(g)
            ),
            spacetime.reversion(f * g).max_abs_diff(spacetime.reversion(g) * spacetime.reversion(f)),
            spacetime.clifford_conj(f * g).max_abs_diff(
                spacetime.clifford_conj(g) * spacetime.clifford_conj(f)
            ),
        )
        return error, _context(f=f, g=g)

    @staticmethod
    def _check_involution_squares(rng: np.random.Generator) -> Sample:
        f = _g12(rng)
        error = max(
            spacetime.main_involution(spacetime.main_involution(f)).max_abs_diff(f),
            spacetime.reversion(spacetime.reversion(f)).max_abs_diff(f),
            spacetime.clifford_conj(spacetime.clifford_conj(f)).max_abs_diff(f),
        )
        return error, _context(f=f)

    # matrix

    @staticmethod
    def _check_matrix_homomorphism(rng: np.random.Generator, count: int) -> Sample:
        a, b = rng.uniform(-1.0, 1.0, (count, 4)), rng.uniform(-1.0, 1.0, (count, 4))
        lhs = matrix_rep.matrix_array(product(a, b, G2_TABLE))
        rhs = matrix_rep.matrix_array(a) @ matrix_rep.matrix_array(b)
        errors = np.abs(lhs - rhs).max(axis=(1, 2))
        worst = int(np.argmax(errors))
        return float(errors[worst]), _context(a=a[worst].tolist(), b=b[worst].tolist())

    @staticmethod
    def _check_matrix_round_trip(rng: np.random.Generator) -> Sample:
        g = _g2(rng)
        return matrix_rep.from_matrix(matrix_rep.matrix_of(g)).max_abs_diff(g), _context(g=g)

    @staticmethod
    def _check_spectral(rng: np.random.Generator) -> Sample:
        g = _g2(rng)
        lhs = matrix_rep.spectral_matrix_of(g)
        return lhs.max_abs_diff(matrix_rep.matrix_of(g)), _context(g=g)

    @staticmethod
    def _check_idempotents(rng: np.random.Generator) -> Sample:
        plus, minus = Idempotent.U_PLUS.element(), Idempotent.U_MINUS.element()
        error = max(
            (plus * plus).max_abs_diff(plus),
            (minus * minus).max_abs_diff(minus),
            (plus * minus).max_abs(),
            (plus + minus).max_abs_diff(ga2.ONE),
            (plus * ga2.E1 * plus).max_abs(),
        )
        return error, {}

    @staticmethod
    def _check_e1_conjugate(rng: np.random.Generator) -> Sample:
        g = _g2(rng)
        return matrix_rep.e1_conjugate(matrix_rep.e1_conjugate(g)).max_abs_diff(g), _context(g=g)

    @staticmethod
    def _check_matrix_f(rng: np.random.Generator) -> Sample:
        f, g = _g12(rng), _g12(rng)
        lhs = matrix_rep.matrix_of_f(f * g)
        rhs = matrix_rep.matrix_of_f(f) @ matrix_rep.matrix_of_f(g)
        return lhs.max_abs_diff(rhs), _context(f=f, g=g)

    @staticmethod
    def _check_matrix_involutions(rng: np.random.Generator) -> Sample:
        f = _g12(rng)
        m = matrix_rep.matrix_of_f(f)
        error = max(
            matrix_rep.matrix_of_f(spacetime.main_involution(f)).max_abs_diff(
                matrix_rep.matrix_main_involution(m)
            ),
            matrix_rep.matrix_of_f(spacetime.reversion(f)).max_abs_diff(matrix_rep.matrix_reversion(m)),
            matrix_rep.matrix_of_f(spacetime.clifford_conj(f)).max_abs_diff(
                matrix_rep.matrix_clifford_conj(m)
            ),
        )
        return error, _context(f=f)

    @staticmethod
    def _check_boost_oracle(rng: np.random.Generator) -> Sample:
        x = _g2(rng)
        a, phi = _unit(rng), rng.uniform(-3.0, 3.0)
        image = matrix_rep.matrix_of(transforms.active_boost(x, a, phi))
        oracle = (
            matrix_rep.matrix_of(ga2.vector_exp(a, -phi / 2))
            @ matrix_rep.matrix_of(x)
            @ matrix_rep.matrix_of(ga2.vector_exp(a, phi / 2))
        )
        return _relative(image.max_abs_diff(oracle), math.cosh(phi)), _context(x=x, a=a, phi=phi)


def get_verification_service() -> VerificationService:
    """Get a verification service instance."""
    return VerificationService()
