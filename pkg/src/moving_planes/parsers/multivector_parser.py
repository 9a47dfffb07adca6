"""Parser for the text and JSON forms of algebra elements."""

import re
from typing import Union

import pydantic

from moving_planes.core.exceptions import ParsingError
from moving_planes.core.models import (
    G2Multivector,
    G12Multivector,
    HyperbolicNumber,
    Vector2,
)

# Exponents must be signed so that "2e1" always reads as 2 e1
_NUMBER = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]\d+)?"


class MultivectorParser:
    """Parse ``a + b e1 + c e2 + d e12`` style text (whitespace-insensitive) or JSON."""

    # Basis names per algebra, mapped to the coefficient slot
    BASIS_NAMES = {
        "g2": {"": 0, "e1": 1, "e2": 2, "e12": 3, "i": 3},
        "g12": {"": 0, "g0": 1, "g1": 2, "g2": 3, "g01": 4, "g02": 5, "g21": 6, "g012": 7, "s": 7},
        "hyperbolic": {"": 0, "u": 1},
    }

    def __init__(self):
        self._patterns = {
            algebra: self._term_pattern(names) for algebra, names in self.BASIS_NAMES.items()
        }

    @staticmethod
    def _term_pattern(names: dict[str, int]) -> re.Pattern:
        # Longest names first so e12 wins over e1
        alternatives = "|".join(
            re.escape(n) for n in sorted((n for n in names if n), key=len, reverse=True)
        )
        return re.compile(rf"([+-]?)({_NUMBER})?\*?({alternatives})?")

    def _parse_terms(self, text: str, algebra: str) -> list[float]:
        names = self.BASIS_NAMES[algebra]
        pattern = self._patterns[algebra]
        compact = re.sub(r"\s+", "", text)
        if not compact:
            raise ParsingError("Empty input")

        coefficients = [0.0] * (max(names.values()) + 1)
        pos = 0
        while pos < len(compact):
            match = pattern.match(compact, pos)
            sign, number, name = match.groups()
            if number is None and name is None:
                raise ParsingError(f"Unexpected input at position {pos} in {text!r}")
            if pos > 0 and not sign:
                raise ParsingError(f"Missing '+' or '-' before {compact[pos:]!r} in {text!r}")

            value = float(number) if number is not None else 1.0
            if sign == "-":
                value = -value
            coefficients[names[name or ""]] += value
            pos = match.end()

        return coefficients

    @staticmethod
    def _parse_json(text: str, model: type[pydantic.BaseModel]):
        try:
            return model.model_validate_json(text)
        except pydantic.ValidationError as e:
            raise ParsingError(f"Invalid {model.__name__} JSON: {e}")

    def _parse(self, text: str, algebra: str, model):
        text = text.strip()
        if text.startswith("{"):
            return self._parse_json(text, model)
        try:
            return model.from_array(self._parse_terms(text, algebra))
        except pydantic.ValidationError as e:
            raise ParsingError(f"Invalid coefficients in {text!r}: {e}")

    def parse_g2(self, text: str) -> G2Multivector:
        return self._parse(text, "g2", G2Multivector)

    def parse_g12(self, text: str) -> G12Multivector:
        return self._parse(text, "g12", G12Multivector)

    def parse_hyperbolic(self, text: str) -> HyperbolicNumber:
        text = text.strip()
        if text.startswith("{"):
            return self._parse_json(text, HyperbolicNumber)
        x, y = self._parse_terms(text, "hyperbolic")
        try:
            return HyperbolicNumber(x=x, y=y)
        except pydantic.ValidationError as e:
            raise ParsingError(f"Invalid coefficients in {text!r}: {e}")

    def parse_element(self, text: str) -> Union[G2Multivector, G12Multivector]:
        """G12 when the text names a spacetime basis element, else G2."""
        if re.search(r"g\d", text) or '"1"' in text:
            return self.parse_g12(text)
        return self.parse_g2(text)

    def parse_vector(self, text: str) -> Vector2:
        """``x,y`` pair."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ParsingError(f"Expected 'x,y', got {text!r}")
        try:
            return Vector2(v1=float(parts[0]), v2=float(parts[1]))
        except (ValueError, pydantic.ValidationError) as e:
            raise ParsingError(f"Invalid vector {text!r}: {e}")

    def parse_range(self, text: str) -> tuple[float, float]:
        """``start:stop`` pair, or a single value."""
        parts = text.split(":")
        try:
            if len(parts) == 1:
                value = float(parts[0])
                return value, value
            if len(parts) == 2:
                return float(parts[0]), float(parts[1])
        except ValueError as e:
            raise ParsingError(f"Invalid range {text!r}: {e}")
        raise ParsingError(f"Expected 'start:stop', got {text!r}")


def get_parser() -> MultivectorParser:
    """Get a parser instance."""
    return MultivectorParser()
