"""Custom exceptions for Moving Planes."""


class MovingPlanesError(Exception):
    """Base exception for all Moving Planes errors."""
    pass


class ValidationError(MovingPlanesError):
    """Input outside the contract of a restricted formula."""
    pass


class ScalarPartError(ValidationError):
    """A zero-scalar formula received an element with a scalar part."""
    pass


class ParsingError(MovingPlanesError):
    """Text or JSON input could not be parsed."""
    pass


class ExportError(MovingPlanesError):
    """Export operation failure."""
    pass


class ConfigurationError(MovingPlanesError):
    """Configuration/setup issue."""
    pass


class DomainError(MovingPlanesError):
    """Mathematical domain failure."""
    pass


class NullConeError(DomainError):
    """Hyperbolic number lies on the null cone |x| = |y|."""
    pass


class AmbiguousRotorError(DomainError):
    """Antipodal vectors: the rotor between them is not unique."""
    pass


class NotUnitBivectorError(DomainError):
    """Element is not a relative bivector with h^2 = -1."""
    pass


class NotUnitTimelikeError(DomainError):
    """Minkowski vector is not unit timelike."""
    pass


class SuperluminalError(DomainError):
    """Speed is not strictly below 1."""
    pass


class DegenerateDirectionError(DomainError):
    """Passive boost direction is undefined (coincident frames)."""
    pass


class NotEvenError(DomainError):
    """G12 element has an odd-grade part."""
    pass


class DegenerateDError(DomainError):
    """The bivector D = (w - v) ^ u vanishes or is null."""
    pass


class TimeOrientationError(DomainError):
    """Frames or timelike vectors have opposite orientation."""
    pass


class ZeroVectorError(DomainError):
    """Zero vector has no causal class."""
    pass
