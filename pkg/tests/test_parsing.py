from fractions import Fraction

import pytest
from hypothesis import given, settings

from compideal.errors import ParseError
from compideal.groebner import Polynomial, PolynomialIdeal
from compideal.monomial import MonomialIdeal, maximal_ideal, mu
from compideal.parsing import format_ideal, parse_ideal, parse_polynomial, parse_vars
from helpers import EX71, monomial_ideals

EX71_TEXT = "x^4, x^3*y, x^2*z, x^2*y^2, x*y^2*z, x*y*z^2, x*z^3, y^3, y^2*z^2, y*z^3, z^5"


def test_ex71_text():
    p = parse_ideal(EX71_TEXT)
    assert p.kind == "monomial"
    assert p.ideal == EX71 and mu(p.ideal) == 11


def test_ex72_text_is_polynomial():
    p = parse_ideal("z^3, y^3 - x^2*z, y^2*z^2, x*y*z^2, x^2*z^2, x*y^2*z, x^2*y*z,\n"
                    "x^3*z, x^2*y^2, x^3*y, x^4")
    assert p.kind == "polynomial"
    assert len(p.ideal.gens) == 11


def test_maximal_ideal():
    assert parse_ideal("x, y, z").ideal == maximal_ideal(3)


def test_headers_comments_and_newlines():
    text = "# two variables\nvars: a, b\n\na^2\nb^3   # trailing comment\n"
    p = parse_ideal(text)
    assert p.names == ["a", "b"]
    assert p.ideal == MonomialIdeal([(2, 0), (0, 3)])


def test_kind_header_forces_polynomial():
    p = parse_ideal("kind: polynomial\nx^2, y")
    assert isinstance(p.ideal, PolynomialIdeal)


def test_indexed_variables():
    assert parse_vars("4") == ["x1", "x2", "x3", "x4"]
    p = parse_ideal("x1^2, x2, x3*x4, x4^3, x3^2", names=parse_vars("4"))
    assert p.ideal.dim == 4


def test_expression_features():
    names = ["x", "y", "z"]
    f = parse_polynomial("3/2*x^2 - (y + z)**2 + 2*(x - x)", names)
    assert f.terms[(2, 0, 0)] == Fraction(3, 2)
    assert f.terms[(0, 1, 1)] == -2
    assert (1, 0, 0) not in f.terms
    g = parse_polynomial("-(x*(y^3 + z^3))", names)
    assert g == Polynomial({(1, 3, 0): -1, (1, 0, 3): -1}, 3)


def test_newline_inside_parentheses_continues():
    p = parse_ideal("x*(y^3 +\n z^3), x^4, y^5, z^5")
    assert len(p.ideal.gens) == 4


@pytest.mark.parametrize("text, line, column", [
    ("x^2, w", 1, 6),
    ("x^2,\ny^", 2, 3),
    ("x^2 y", 1, 5),
    ("x + (y", 1, 7),
    ("x $ y", 1, 3),
    ("2x", 1, 2),
])
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_ideal(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_other_parse_errors():
    with pytest.raises(ParseError):
        parse_ideal("kind: monomial\nx + y")
    with pytest.raises(ParseError):
        parse_ideal("kind: banana\nx")
    with pytest.raises(ParseError):
        parse_ideal("0, x - x")
    with pytest.raises(ParseError):
        parse_vars("x, x")
    with pytest.raises(ParseError):
        parse_polynomial("x / y", ["x", "y"])


@given(monomial_ideals())
@settings(max_examples=100, deadline=None)
def test_monomial_round_trip(I):
    text = format_ideal(I)
    assert parse_ideal(text).ideal == I
    assert format_ideal(parse_ideal(text).ideal) == text


def test_polynomial_round_trip():
    p = parse_ideal("x^4 + y*z^3, x^2*z, y^3 + z^5")
    again = parse_ideal(str(p))
    assert [g.terms for g in again.ideal.gens] == [g.terms for g in p.ideal.gens]
