"""Tests for the multivector parser."""

import pytest
from hypothesis import given

from moving_planes.core.exceptions import ParsingError
from moving_planes.core.models import (
    G2Multivector,
    G12Multivector,
    HyperbolicNumber,
    Vector2,
)
from moving_planes.parsers.multivector_parser import get_parser
from tests.strategies import wide_g2_multivectors, wide_g12_multivectors, wide_hyperbolic_numbers


@pytest.fixture
def parser():
    return get_parser()


class TestParseG2:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("1 + 2 e1 + 3 e2 + 4 e12", G2Multivector(s=1, v1=2, v2=3, b=4)),
            ("1+2e1+3e2+4e12", G2Multivector(s=1, v1=2, v2=3, b=4)),
            ("-e12", G2Multivector(b=-1)),
            ("e1 - e2", G2Multivector(v1=1, v2=-1)),
            ("0.5*e1 + 1.5 i", G2Multivector(v1=0.5, b=1.5)),
            ("1e-3 e2", G2Multivector(v2=0.001)),
            ("2.5E+1", G2Multivector(s=25)),
            ("e1 + e1", G2Multivector(v1=2)),
        ],
    )
    def test_text(self, parser, text, expected):
        assert parser.parse_g2(text) == expected

    def test_unsigned_exponent_reads_as_basis(self, parser):
        assert parser.parse_g2("2e1") == G2Multivector(v1=2.0)

    def test_json(self, parser):
        result = parser.parse_g2('{"s": 1.0, "e1": 0.5, "e12": -2.0}')
        assert result == G2Multivector(s=1.0, v1=0.5, b=-2.0)

    @pytest.mark.parametrize("text", ["", "   ", "e3", "1 +", "x + e1", "1 + + e1"])
    def test_invalid_text(self, parser, text):
        with pytest.raises(ParsingError):
            parser.parse_g2(text)

    @pytest.mark.parametrize("text", ['{"s": "abc"}', '{"s": 1.0', '{"e1": NaN}'])
    def test_invalid_json(self, parser, text):
        with pytest.raises(ParsingError):
            parser.parse_g2(text)


class TestParseOther:
    def test_g12(self, parser):
        result = parser.parse_g12("1 + g0 - 2 g21 + 0.5 g012")
        assert result == G12Multivector(scalar_part=1.0, g0=1.0, g21=-2.0, g012=0.5)

    def test_g12_pseudoscalar_shorthand(self, parser):
        assert parser.parse_g12("s") == G12Multivector(g012=1.0)

    def test_hyperbolic(self, parser):
        assert parser.parse_hyperbolic("5 + 3u") == HyperbolicNumber(x=5.0, y=3.0)

    def test_hyperbolic_json(self, parser):
        assert parser.parse_hyperbolic('{"x": 1, "y": -1}') == HyperbolicNumber(x=1.0, y=-1.0)

    @pytest.mark.parametrize(
        "text, expected_type",
        [
            ("e1 + 2 e12", G2Multivector),
            ("g0 + g12", None),
            ("g01", G12Multivector),
            ('{"1": 2.0, "g0": 1.0}', G12Multivector),
        ],
    )
    def test_element_detection(self, parser, text, expected_type):
        if expected_type is None:
            with pytest.raises(ParsingError):
                parser.parse_element(text)
        else:
            assert isinstance(parser.parse_element(text), expected_type)


class TestVectorsAndRanges:
    def test_vector(self, parser):
        assert parser.parse_vector("0.5,-0.25") == Vector2(v1=0.5, v2=-0.25)

    @pytest.mark.parametrize("text", ["0.5", "1,2,3", "a,b", "inf,0"])
    def test_invalid_vector(self, parser, text):
        with pytest.raises(ParsingError):
            parser.parse_vector(text)

    @pytest.mark.parametrize(
        "text, expected",
        [("0:1.5", (0.0, 1.5)), ("0.3", (0.3, 0.3)), ("-1:1", (-1.0, 1.0))],
    )
    def test_range(self, parser, text, expected):
        assert parser.parse_range(text) == expected

    @pytest.mark.parametrize("text", ["0:1:2", "a:b", ""])
    def test_invalid_range(self, parser, text):
        with pytest.raises(ParsingError):
            parser.parse_range(text)


class TestRoundTrip:
    @given(wide_g2_multivectors())
    def test_g2_text(self, g):
        assert get_parser().parse_g2(str(g)) == g

    @given(wide_g12_multivectors())
    def test_g12_text(self, f):
        assert get_parser().parse_g12(str(f)) == f

    @given(wide_hyperbolic_numbers())
    def test_hyperbolic_text(self, w):
        assert get_parser().parse_hyperbolic(str(w)) == w

    @given(wide_g2_multivectors())
    def test_g2_json(self, g):
        assert get_parser().parse_g2(g.model_dump_json(by_alias=True)) == g

    @given(wide_g12_multivectors())
    def test_g12_json(self, f):
        assert get_parser().parse_g12(f.model_dump_json(by_alias=True)) == f

    @given(wide_hyperbolic_numbers())
    def test_hyperbolic_json(self, w):
        assert get_parser().parse_hyperbolic(w.model_dump_json(by_alias=True)) == w
