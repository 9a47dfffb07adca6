"""Core data models for Moving Planes."""

import math
from collections.abc import Sequence
from enum import Enum
from numbers import Real
from typing import ClassVar, Literal, Optional

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    FiniteFloat,
    field_validator,
    model_validator,
)

from moving_planes.config import get_settings
from moving_planes.core.algebra import (
    G2_GRADES,
    G2_NAMES,
    G2_TABLE,
    G12_GRADES,
    G12_NAMES,
    G12_TABLE,
    grade_signs,
    product,
)
from moving_planes.core.exceptions import (
    SuperluminalError,
    ValidationError,
    ZeroVectorError,
)

# Largest hyperbolic angle whose tanh stays below 1 in double precision
MAX_RAPIDITY = 18.0


def format_terms(coefficients: Sequence[float], names: Sequence[str]) -> str:
    """Render ``a + b e1 - c e12`` style text, omitting zero terms."""
    parts: list[str] = []
    for value, name in zip(coefficients, names):
        value = float(value)
        if value == 0.0:
            continue
        magnitude = repr(abs(value))
        term = f"{magnitude} {name}" if name else magnitude
        if not parts:
            parts.append(f"-{term}" if value < 0 else term)
        else:
            parts.append(f"{'-' if value < 0 else '+'} {term}")
    return " ".join(parts) if parts else "0"


class ValueModel(BaseModel):
    """Immutable value with alias-aware construction."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)


class Multivector(ValueModel):
    """Shared arithmetic for fixed-basis multivectors.

    Subclasses provide the Cayley tensor, the grade of each coefficient and
    the basis names used by the text format.
    """

    _table: ClassVar[np.ndarray]
    _grades: ClassVar[np.ndarray]
    _names: ClassVar[tuple[str, ...]]

    @property
    def coefficients(self) -> np.ndarray:
        return np.array([getattr(self, name) for name in type(self).model_fields])

    @classmethod
    def from_array(cls, values: Sequence[float]):
        names = list(cls.model_fields)
        if len(values) != len(names):
            raise ValidationError(
                f"{cls.__name__} needs {len(names)} coefficients, got {len(values)}"
            )
        return cls(**{name: float(v) for name, v in zip(names, values)})

    @classmethod
    def scalar(cls, value: float):
        values = np.zeros(len(cls.model_fields))
        values[0] = value
        return cls.from_array(values)

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, Real) and not isinstance(other, bool):
            return type(self).scalar(float(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return type(self).from_array(self.coefficients + other.coefficients)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return type(self).from_array(self.coefficients - other.coefficients)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return type(self).from_array(other.coefficients - self.coefficients)

    def __neg__(self):
        return type(self).from_array(-self.coefficients)

    def __mul__(self, other):
        if isinstance(other, Real) and not isinstance(other, bool):
            return type(self).from_array(self.coefficients * float(other))
        if not isinstance(other, type(self)):
            return NotImplemented
        return type(self).from_array(
            product(self.coefficients, other.coefficients, self._table)
        )

    def __rmul__(self, other):
        if isinstance(other, Real) and not isinstance(other, bool):
            return type(self).from_array(self.coefficients * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Real) and not isinstance(other, bool):
            return type(self).from_array(self.coefficients / float(other))
        return NotImplemented

    def __invert__(self):
        """Reversion: negates grades 2 and 3."""
        return self.flip_grades((2, 3))

    def flip_grades(self, grades: Sequence[int]):
        """Negate the coefficients of the listed grades."""
        return type(self).from_array(self.coefficients * grade_signs(self._grades, grades))

    def grade_part(self, k: int):
        """Projection onto grade ``k``."""
        if k not in set(self._grades.tolist()):
            raise ValidationError(f"Invalid grade {k} for {type(self).__name__}")
        return type(self).from_array(np.where(self._grades == k, self.coefficients, 0.0))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coefficients)))

    def max_abs_diff(self, other) -> float:
        other = self._coerce(other)
        return float(np.max(np.abs(self.coefficients - other.coefficients)))

    def isclose(self, other, tol: Optional[float] = None) -> bool:
        tol = get_settings().tolerance if tol is None else tol
        return self.max_abs_diff(other) <= tol

    def __str__(self) -> str:
        return format_terms(self.coefficients, self._names)


class G2Multivector(Multivector):
    """General element x + v1 e1 + v2 e2 + b i of the plane algebra."""

    _table: ClassVar[np.ndarray] = G2_TABLE
    _grades: ClassVar[np.ndarray] = G2_GRADES
    _names: ClassVar[tuple[str, ...]] = G2_NAMES

    s: FiniteFloat = 0.0
    v1: FiniteFloat = Field(default=0.0, alias="e1")
    v2: FiniteFloat = Field(default=0.0, alias="e2")
    b: FiniteFloat = Field(default=0.0, alias="e12")

    @classmethod
    def from_vector(cls, v: "Vector2") -> "G2Multivector":
        return cls(v1=v.v1, v2=v.v2)

    @property
    def square_zero_scalar(self) -> float:
        """Scalar A^2 = v1^2 + v2^2 - b^2 of the zero-scalar part."""
        return self.v1 * self.v1 + self.v2 * self.v2 - self.b * self.b


class Vector2(ValueModel):
    """Grade-1 element v1 e1 + v2 e2."""

    v1: FiniteFloat = 0.0
    v2: FiniteFloat = 0.0

    @property
    def norm(self) -> float:
        return math.hypot(self.v1, self.v2)

    def dot(self, other: "Vector2") -> float:
        return self.v1 * other.v1 + self.v2 * other.v2

    def wedge(self, other: "Vector2") -> float:
        """Coefficient of i in self ^ other."""
        return self.v1 * other.v2 - self.v2 * other.v1

    def scaled(self, factor: float) -> "Vector2":
        return Vector2(v1=self.v1 * factor, v2=self.v2 * factor)

    def __add__(self, other: "Vector2") -> "Vector2":
        return Vector2(v1=self.v1 + other.v1, v2=self.v2 + other.v2)

    def __sub__(self, other: "Vector2") -> "Vector2":
        return Vector2(v1=self.v1 - other.v1, v2=self.v2 - other.v2)

    def __neg__(self) -> "Vector2":
        return Vector2(v1=-self.v1, v2=-self.v2)

    def to_multivector(self) -> G2Multivector:
        return G2Multivector(v1=self.v1, v2=self.v2)

    def __str__(self) -> str:
        return format_terms((self.v1, self.v2), ("e1", "e2"))


class UnitVector2(Vector2):
    """Vector of Euclidean norm 1."""

    @model_validator(mode="after")
    def check_unit(self) -> "UnitVector2":
        if abs(self.norm - 1.0) > get_settings().unit_epsilon:
            raise ValueError(f"Unit vector required, got norm {self.norm!r}")
        return self

    @classmethod
    def from_angle(cls, angle: float) -> "UnitVector2":
        return cls(v1=math.cos(angle), v2=math.sin(angle))

    @classmethod
    def normalized(cls, v1: float, v2: float) -> "UnitVector2":
        m = max(abs(v1), abs(v2))
        if m == 0.0:
            raise ZeroVectorError("Cannot normalize the zero vector")
        # rescale first so subnormal inputs keep full precision
        v1, v2 = v1 / m, v2 / m
        n = math.hypot(v1, v2)
        return cls(v1=v1 / n, v2=v2 / n)

    @property
    def angle(self) -> float:
        return math.atan2(self.v2, self.v1)

    def __neg__(self) -> "UnitVector2":
        return UnitVector2(v1=-self.v1, v2=-self.v2)


class Velocity(Vector2):
    """Velocity in units of c, with speed strictly below 1."""

    @model_validator(mode="after")
    def check_subluminal(self) -> "Velocity":
        if not self.norm < 1.0:
            raise ValueError(f"Speed must be < 1, got {self.norm!r}")
        return self

    @classmethod
    def of(cls, v1: float, v2: float) -> "Velocity":
        """Build a velocity, raising SuperluminalError when |v| >= 1."""
        speed = math.hypot(v1, v2)
        if not speed < 1.0:
            raise SuperluminalError(f"Speed must be < 1, got {speed!r}")
        return cls(v1=v1, v2=v2)

    @classmethod
    def from_vector(cls, v: Vector2) -> "Velocity":
        return cls.of(v.v1, v.v2)

    @property
    def speed(self) -> float:
        return self.norm


class ZeroScalarClass(str, Enum):
    """Trichotomy of zero-scalar elements by the sign of A^2."""
    RELATIVE_VECTOR = "RelativeVector"
    NILPOTENT = "Nilpotent"
    RELATIVE_BIVECTOR = "RelativeBivector"


class HyperbolicNumber(ValueModel):
    """w = x + u y with u^2 = 1."""

    x: FiniteFloat = 0.0
    y: FiniteFloat = 0.0

    def __add__(self, other: "HyperbolicNumber") -> "HyperbolicNumber":
        return HyperbolicNumber(x=self.x + other.x, y=self.y + other.y)

    def __sub__(self, other: "HyperbolicNumber") -> "HyperbolicNumber":
        return HyperbolicNumber(x=self.x - other.x, y=self.y - other.y)

    def __neg__(self) -> "HyperbolicNumber":
        return HyperbolicNumber(x=-self.x, y=-self.y)

    def __mul__(self, other: "HyperbolicNumber") -> "HyperbolicNumber":
        return HyperbolicNumber(
            x=self.x * other.x + self.y * other.y,
            y=self.x * other.y + other.x * self.y,
        )

    def max_abs_diff(self, other: "HyperbolicNumber") -> float:
        return max(abs(self.x - other.x), abs(self.y - other.y))

    def __str__(self) -> str:
        return format_terms((self.x, self.y), ("", "u"))


class HyperbolicBranch(str, Enum):
    """Whether the Euler form is rho e^{u phi} or rho u e^{u phi}."""
    TIMELIKE = "TimelikeBranch"
    SPACELIKE = "SpacelikeBranch"


class HyperbolicPolar(ValueModel):
    """Euler form sign * rho * (1 or u) * e^{u phi} of a hyperbolic number."""

    sign: Literal[1, -1] = 1
    axis: HyperbolicBranch = HyperbolicBranch.TIMELIKE
    rho: FiniteFloat = Field(default=1.0, ge=0.0)
    phi: FiniteFloat = 0.0


class OrientedFrame(ValueModel):
    """A moving plane h = orientation * i * e^{phi a} with h^2 = -1."""

    orientation: Literal[1, -1] = 1
    a: UnitVector2 = Field(default_factory=lambda: UnitVector2(v1=1.0, v2=0.0))
    phi: FiniteFloat = 0.0

    @classmethod
    def positive(cls, a: UnitVector2, phi: float) -> "OrientedFrame":
        """Positively oriented frame in canonical form (phi >= 0)."""
        if phi < 0:
            return cls(orientation=1, a=-a, phi=-phi)
        return cls(orientation=1, a=a, phi=phi)

    def bivector(self) -> G2Multivector:
        """The relative bivector h, using i a = a2 e1 - a1 e2."""
        sh = math.sinh(self.phi)
        ch = math.cosh(self.phi)
        o = self.orientation
        return G2Multivector(
            v1=o * self.a.v2 * sh,
            v2=-o * self.a.v1 * sh,
            b=o * ch,
        )

    @property
    def velocity(self) -> Vector2:
        return self.a.scaled(math.tanh(self.phi))


class RelativeBasis(ValueModel):
    """Relative orthonormal basis {e1', e2'} with j = e1' e2'."""

    e1p: G2Multivector
    e2p: G2Multivector
    j: G2Multivector


class CompositionResult(ValueModel):
    """k = j e^{omega c}: hyperbolic angle, direction and relative velocity."""

    omega: FiniteFloat = Field(ge=0.0)
    c_direction: G2Multivector
    vw: G2Multivector
    cosh_omega: FiniteFloat


class PassiveBoost(ValueModel):
    """Passive boost e^{Omega d} taking one frame to another."""

    direction: UnitVector2
    omega: FiniteFloat
    cosh_omega: FiniteFloat
    uvw: Velocity


class G12Multivector(Multivector):
    """Element of the spacetime algebra over (1, g0, g1, g2, g01, g02, g21, g012)."""

    _table: ClassVar[np.ndarray] = G12_TABLE
    _grades: ClassVar[np.ndarray] = G12_GRADES
    _names: ClassVar[tuple[str, ...]] = G12_NAMES

    scalar_part: FiniteFloat = Field(default=0.0, alias="1")
    g0: FiniteFloat = 0.0
    g1: FiniteFloat = 0.0
    g2: FiniteFloat = 0.0
    g01: FiniteFloat = 0.0
    g02: FiniteFloat = 0.0
    g21: FiniteFloat = 0.0
    g012: FiniteFloat = 0.0


class MinkowskiVector(ValueModel):
    """Grade-1 spacetime vector t g0 + x1 g1 + x2 g2."""

    t: FiniteFloat = 0.0
    x1: FiniteFloat = 0.0
    x2: FiniteFloat = 0.0

    @property
    def square(self) -> float:
        """Minkowski square t^2 - x1^2 - x2^2."""
        return self.t * self.t - self.x1 * self.x1 - self.x2 * self.x2

    def to_multivector(self) -> G12Multivector:
        return G12Multivector(g0=self.t, g1=self.x1, g2=self.x2)

    def __add__(self, other: "MinkowskiVector") -> "MinkowskiVector":
        return MinkowskiVector(t=self.t + other.t, x1=self.x1 + other.x1, x2=self.x2 + other.x2)

    def __sub__(self, other: "MinkowskiVector") -> "MinkowskiVector":
        return MinkowskiVector(t=self.t - other.t, x1=self.x1 - other.x1, x2=self.x2 - other.x2)

    def max_abs_diff(self, other: "MinkowskiVector") -> float:
        return max(abs(self.t - other.t), abs(self.x1 - other.x1), abs(self.x2 - other.x2))

    def __str__(self) -> str:
        return format_terms((self.t, self.x1, self.x2), ("g0", "g1", "g2"))


class CausalClass(str, Enum):
    """Causal character of a Minkowski vector."""
    TIMELIKE = "Timelike"
    SPACELIKE = "Spacelike"
    LIGHTLIKE = "Lightlike"


class SpacetimeComposition(ValueModel):
    """v . w and the relative velocity v_w recomputed in G12."""

    v_dot_w: FiniteFloat
    vw: G12Multivector


class DSplit(ValueModel):
    """Parallel/perpendicular split of v and w relative to D = (w - v) ^ u."""

    d: G12Multivector
    w_par: MinkowskiVector
    w_perp: MinkowskiVector
    v_par: MinkowskiVector
    v_perp: MinkowskiVector


Row = tuple[FiniteFloat, FiniteFloat]


class Mat2(ValueModel):
    """Real 2x2 matrix, stored row-major."""

    m: tuple[Row, Row] = ((1.0, 0.0), (0.0, 1.0))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.m, dtype=float)

    @classmethod
    def from_array(cls, values: np.ndarray) -> "Mat2":
        values = np.asarray(values, dtype=float)
        return cls(m=(tuple(values[0].tolist()), tuple(values[1].tolist())))

    @property
    def m11(self) -> float:
        return self.m[0][0]

    @property
    def m12(self) -> float:
        return self.m[0][1]

    @property
    def m21(self) -> float:
        return self.m[1][0]

    @property
    def m22(self) -> float:
        return self.m[1][1]

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2.from_array(self.array @ other.array)

    def adjugate(self) -> "Mat2":
        return Mat2(m=((self.m22, -self.m12), (-self.m21, self.m11)))

    def max_abs_diff(self, other: "Mat2") -> float:
        return float(np.max(np.abs(self.array - other.array)))

    def __str__(self) -> str:
        return f"[[{self.m11!r}, {self.m12!r}], [{self.m21!r}, {self.m22!r}]]"


class Mat2Complexified(ValueModel):
    """re + s im with s central and s^2 = -1."""

    re: Mat2 = Field(default_factory=Mat2)
    im: Mat2 = Field(default_factory=lambda: Mat2(m=((0.0, 0.0), (0.0, 0.0))))

    def __matmul__(self, other: "Mat2Complexified") -> "Mat2Complexified":
        a, b = self.re.array, self.im.array
        c, d = other.re.array, other.im.array
        return Mat2Complexified(
            re=Mat2.from_array(a @ c - b @ d),
            im=Mat2.from_array(a @ d + b @ c),
        )

    def max_abs_diff(self, other: "Mat2Complexified") -> float:
        return max(self.re.max_abs_diff(other.re), self.im.max_abs_diff(other.im))

    def __str__(self) -> str:
        return f"{self.re} + s {self.im}"


class Idempotent(str, Enum):
    """Mutually annihilating idempotents u+ and u- = (1 +/- e2) / 2."""
    U_PLUS = "uPlus"
    U_MINUS = "uMinus"

    def element(self) -> G2Multivector:
        sign = 1.0 if self is Idempotent.U_PLUS else -1.0
        return G2Multivector(s=0.5, v2=0.5 * sign)


class OutputFormat(str, Enum):
    """Output formats for command reports."""
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class VerifySuite(str, Enum):
    """Randomized invariant suites."""
    CORE = "core"
    HYPERBOLIC = "hyperbolic"
    TRANSFORMS = "transforms"
    KINEMATICS = "kinematics"
    SPACETIME = "spacetime"
    MATRIX = "matrix"
    ALL = "all"


class SweepSpec(BaseModel):
    """Parameter grid over (phi, rho, theta_ab) for the active/passive sweep."""

    phi_range: tuple[FiniteFloat, FiniteFloat]
    rho_range: tuple[FiniteFloat, FiniteFloat]
    theta_range: tuple[FiniteFloat, FiniteFloat]
    steps: int = Field(default=5, ge=1)

    @field_validator("phi_range", "rho_range", "theta_range")
    @classmethod
    def check_ordered(cls, v: tuple[float, float]) -> tuple[float, float]:
        if v[0] > v[1]:
            raise ValueError(f"Empty range {v[0]!r}:{v[1]!r}")
        return v

    @field_validator("phi_range", "rho_range")
    @classmethod
    def check_subluminal(cls, v: tuple[float, float]) -> tuple[float, float]:
        if max(abs(v[0]), abs(v[1])) > MAX_RAPIDITY:
            raise ValueError(f"Hyperbolic angles beyond {MAX_RAPIDITY} reach light speed")
        return v

    def axis(self, bounds: tuple[float, float]) -> list[float]:
        return np.linspace(bounds[0], bounds[1], self.steps).tolist()

    def grid(self) -> list[tuple[float, float, float]]:
        """All (phi, rho, theta) points, phi-major."""
        return [
            (phi, rho, theta)
            for phi in self.axis(self.phi_range)
            for rho in self.axis(self.rho_range)
            for theta in self.axis(self.theta_range)
        ]


class SweepRow(ValueModel):
    """One active/passive comparison row."""

    phi: float
    rho: float
    theta_ab: float
    omega: float
    passive_omega: float = Field(alias="Omega")
    vw_norm: float
    uvw_norm: float
    active_passive_gap: float


class ComposeReport(ValueModel):
    """Composition of two frames by the G2 route and the G12 route."""

    j: OrientedFrame
    k: OrientedFrame
    composition: CompositionResult
    spacetime: SpacetimeComposition
    discrepancy: float


class PassiveReport(ValueModel):
    """Passive boost between two frames, with its consistency residuals."""

    uv: Velocity
    uw: Velocity
    boost: PassiveBoost
    recovered_uw: Velocity
    cosh_rho: float
    sandwich_residual: float
    round_trip_residual: float


class ClassifyReport(ValueModel):
    """Classification of a zero-scalar element."""

    element: G2Multivector
    square: float
    zero_scalar_class: ZeroScalarClass
    frame: Optional[OrientedFrame] = None
    velocity: Optional[Vector2] = None


class DualReport(ValueModel):
    """Dual timelike vector of a positively oriented unit bivector."""

    element: G2Multivector
    vector: MinkowskiVector
    causal_class: CausalClass
    frame: OrientedFrame
    relative_velocity: G12Multivector


class InvariantResult(ValueModel):
    """Max error of one randomized invariant."""

    suite: VerifySuite
    name: str
    samples: int
    max_error: float
    threshold: float
    passed: bool
    counterexample: Optional[dict[str, float]] = None
    message: Optional[str] = None


class VerificationReport(ValueModel):
    """Outcome of a verification run."""

    suite: VerifySuite
    seed: int
    count: int
    results: list[InvariantResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[InvariantResult]:
        return [r for r in self.results if not r.passed]
