import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from grasscurve.arith import (
    HomoPoly,
    Poly,
    Q,
    RatFun,
    RatMatrix,
    SingularMatrixError,
    homo_gcd,
    linalg,
    poly_gcd,
    poly_lcm,
    ratfun_reduce,
    ratmatrix_inverse,
    rational,
    to_str,
)
from grasscurve.arith.polymatrix import poly_det

X = sympy.Symbol("x")
x = Poly.x()


def to_sympy(p: Poly):
    return sum((sympy.Rational(int(c.numerator), int(c.denominator)) * X**i for i, c in enumerate(p.coeffs)),
               sympy.Integer(0))


def from_sympy(expr) -> Poly:
    coeffs = sympy.Poly(expr, X).all_coeffs()[::-1]
    return Poly([Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in coeffs])


small = st.integers(-6, 6)
polys = st.lists(small, max_size=6).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


# -- scalars -----------------------------------------------------------------


def test_rational_accepts_common_inputs():
    assert rational("3/4") == Q(3, 4)
    assert rational(Fraction(-1, 3)) == Q(-1, 3)
    assert rational(5) == 5
    assert to_str(Q(-7, 2)) == "-7/2"
    assert to_str(Q(4)) == "4"


# -- polynomials ---------------------------------------------------------------


def test_gcd_examples():
    assert poly_gcd(x**2 - 1, x - 1) == x - 1
    p = 3 * x**2 + 6
    assert poly_gcd(p, Poly()) == p.monic()
    assert poly_gcd(Poly([3]), Poly([5])) == Poly([1])
    assert poly_gcd(Poly(), Poly()).is_zero()


def test_zero_polynomial_has_no_degree():
    assert Poly().degree is None
    assert Poly([0, 0]).is_zero()
    assert Poly([1]).degree == 0


@given(polys, polys)
def test_gcd_matches_sympy(p, q):
    g = poly_gcd(p, q)
    if p.is_zero() and q.is_zero():
        assert g.is_zero()
        return
    expected = sympy.Poly(sympy.gcd(to_sympy(p), to_sympy(q)), X).monic().as_expr()
    assert g == from_sympy(expected)


@given(polys, nonzero_polys)
def test_divmod_identity(p, q):
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.is_zero() or rem.degree < q.degree


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero()


@given(polys, polys)
def test_derivative_product_rule(a, b):
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@given(nonzero_polys, nonzero_polys)
def test_lcm_times_gcd(p, q):
    assert (poly_lcm(p, q) * poly_gcd(p, q)).monic() == (p * q).monic()


def test_compose_and_evaluate():
    p = x**2 + 1
    assert p.compose(x + 1) == x**2 + 2 * x + 2
    assert p(Q(1, 2)) == Q(5, 4)


# -- homogeneous forms ---------------------------------------------------------


def test_homo_string_and_dehomogenize():
    f = HomoPoly(3, [0, 1, 0, 0])  # s^2 t
    assert str(f) == "s^2*t"
    assert f.dehomogenize() == x**2
    assert f.t_valuation() == 1
    assert HomoPoly.from_terms({(1, 1): 2, (2, 0): 1}) == HomoPoly(2, [1, 2, 0])


def test_homo_terms_must_be_homogeneous():
    with pytest.raises(ValueError):
        HomoPoly.from_terms({(1, 0): 1, (0, 2): 1})


def test_homo_gcd_with_power_of_t():
    # coefficient index = power of t
    s2t2 = HomoPoly(4, [0, 0, 1, 0, 0])
    s3t = HomoPoly(4, [0, 1, 0, 0, 0])
    assert homo_gcd([s2t2, s3t]) == HomoPoly(3, [0, 1, 0, 0])  # s^2 t


def test_homo_substitute():
    f = HomoPoly(1, [1, 0])  # s
    assert f.substitute(1, 1, 0, 1) == HomoPoly(1, [1, 1])  # s + t


# -- rational functions --------------------------------------------------------


def test_ratfun_reduce_examples():
    r = ratfun_reduce(x**2 - 1, 2 * x - 2)
    assert r.num == Poly([Q(1, 2), Q(1, 2)]) and r.den == Poly([1])
    z = ratfun_reduce(Poly(), x)
    assert z.num.is_zero() and z.den == Poly([1])
    assert ratfun_reduce(x, Poly([1])).num == x
    with pytest.raises(ZeroDivisionError):
        ratfun_reduce(x, Poly())


def test_ratfun_string_round_trip():
    from grasscurve.parsing import parse_ratfun

    for f in (RatFun(Poly([1]), Poly([0, 2])), RatFun(x**2 * 3, x**2 + 1), RatFun(Poly([-1]), x**2)):
        assert parse_ratfun(str(f)) == f


ratfuns = st.tuples(polys, nonzero_polys).map(lambda nd: RatFun(*nd))


@given(ratfuns, ratfuns)
def test_ratfun_field_ops(a, b):
    assert a + b - b == a
    if not b.is_zero():
        assert a * b / b == a
    assert ((a * b).derivative()) == a.derivative() * b + a * b.derivative()


@given(ratfuns)
def test_ratfun_is_reduced(f):
    assert f.den.lc == 1
    assert poly_gcd(f.num, f.den).degree == 0 or f.num.is_zero()


# -- matrices ------------------------------------------------------------------


def R(p):
    return RatFun.from_poly(p)


def test_ratmatrix_inverse_examples():
    one, zero = RatFun.constant(1), RatFun.constant(0)
    assert ratmatrix_inverse(RatMatrix.identity(3)) == RatMatrix.identity(3)
    xi = RatMatrix.scalar(2, RatFun.x())
    assert ratmatrix_inverse(xi) == RatMatrix.scalar(2, RatFun.x().inverse())
    m = RatMatrix([[R(x), one], [zero, one]])
    inv = RatFun.x().inverse()
    assert ratmatrix_inverse(m) == RatMatrix([[inv, -inv], [zero, one]])


def test_singular_matrix_function_raises():
    m = RatMatrix([[R(x), R(x**2)], [R(Poly([1])), R(x)]])
    with pytest.raises(SingularMatrixError):
        m.inverse()


def test_random_invertible_inverses():
    rng = random.Random(20261018)
    checked = 0
    while checked < 100:
        n = rng.randint(1, 3)
        m = RatMatrix([[RatFun(Poly([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]),
                                Poly([rng.randint(1, 3), rng.randint(-2, 2)]))
                        for _ in range(n)] for _ in range(n)])
        if m.det().is_zero():
            continue
        inv = m.inverse()
        assert m @ inv == RatMatrix.identity(n)
        assert inv @ m == RatMatrix.identity(n)
        checked += 1


def test_det_matches_sympy():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(1, 4)
        rows = [[Poly([rng.randint(-3, 3) for _ in range(3)]) for _ in range(n)] for _ in range(n)]
        expected = sympy.Matrix([[to_sympy(p) for p in r] for r in rows]).det()
        expected = sympy.expand(expected)
        assert poly_det(rows) == (from_sympy(expected) if expected != 0 else Poly())
        assert RatMatrix([[R(p) for p in r] for r in rows]).det() == RatFun.from_poly(poly_det(rows))


def test_scalar_linalg():
    a = [[Q(2), Q(1)], [Q(4), Q(3)]]
    assert linalg.det(a) == 2
    assert linalg.matmul(a, linalg.inverse(a)) == linalg.identity(2)
    assert linalg.rank([[Q(1), Q(2)], [Q(2), Q(4)]]) == 1
    (k,) = linalg.nullspace([[Q(1), Q(2)], [Q(2), Q(4)]])
    assert k[0] + 2 * k[1] == 0


@settings(max_examples=50)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4))
def test_rank_nullity(rows):
    rows = [[Q(a) for a in r] for r in rows]
    assert linalg.rank(rows) + len(linalg.nullspace(rows, 3)) == 3
