import pytest

from grasscurve.arith import HomoPoly, Poly, Q, RatFun
from grasscurve.parsing import ParseError, parse_form, parse_poly, parse_ratfun

x = Poly.x()


@pytest.mark.parametrize(
    "text, expected",
    [
        ("s", HomoPoly(1, [1, 0])),
        ("s^2*t", HomoPoly(3, [0, 1, 0, 0])),
        ("3 s t - t**2", HomoPoly(2, [0, 3, -1])),
        ("(s + t)^2", HomoPoly(2, [1, 2, 1])),
        ("1/2 s", HomoPoly(1, [Q(1, 2), 0])),
        ("-s/3", HomoPoly(1, [Q(-1, 3), 0])),
    ],
)
def test_parse_form(text, expected):
    assert parse_form(text) == expected


def test_zero_form():
    assert parse_form("0").is_zero()
    assert parse_form("s - s").is_zero()


def test_parse_poly_and_ratfun():
    assert parse_poly("x^2 - 1") == x**2 - 1
    f = parse_ratfun("(x^2 - 1)/(2x - 2)")
    assert f == RatFun(Poly([Q(1, 2), Q(1, 2)]))
    assert parse_ratfun("1/x") == RatFun.x().inverse()


@pytest.mark.parametrize("text", ["s +", "(s", "s t)", "s ^ t", "2 $ s", ""])
def test_malformed_forms(text):
    with pytest.raises(ParseError):
        parse_form(text)


def test_error_reports_column():
    with pytest.raises(ParseError) as err:
        parse_form("s + $")
    assert err.value.column == 5


def test_inhomogeneous_form_rejected():
    with pytest.raises(ValueError):
        parse_form("s + t^2")


def test_division_by_polynomial_needs_ratfun():
    with pytest.raises(ParseError):
        parse_poly("1/x")
    with pytest.raises(ParseError):
        parse_ratfun("1/(x - x)")
