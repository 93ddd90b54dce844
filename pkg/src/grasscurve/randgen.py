"""Seeded random instances for the law suites and the test corpus."""

from __future__ import annotations

import random

from .arith import HomoPoly, Poly, RatFun, RatMatrix, homo_gcd
from .curve import CurveError, HomogeneousCurve
from .group import GroupElement, Moebius2
from .schwarzian import act_on_chart, moebius_apply


def random_group_element(d: int, rng: random.Random, lo: int = -5, hi: int = 5) -> GroupElement:
    n = 2 * d
    while True:
        m = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]
        try:
            return GroupElement.from_matrix(m)
        except ValueError:
            continue


def random_moebius2(rng: random.Random, lo: int = -5, hi: int = 5) -> Moebius2:
    while True:
        a, b, c, d = (rng.randint(lo, hi) for _ in range(4))
        if a * d - b * c:
            return Moebius2(a, b, c, d)


def random_form(e: int, rng: random.Random, lo: int = -3, hi: int = 3) -> HomoPoly:
    return HomoPoly(e, [rng.randint(lo, hi) for _ in range(e + 1)])


def random_poly(deg: int, rng: random.Random, lo: int = -3, hi: int = 3) -> Poly:
    return Poly([rng.randint(lo, hi) for _ in range(deg + 1)])


def random_curve(d: int, rng: random.Random, max_degree: int = 6, lo: int = -3, hi: int = 3) -> HomogeneousCurve:
    """Dense random columns of random degree 0..max_degree."""
    while True:
        degs = [rng.randint(0, max_degree) for _ in range(d)]
        cols = [[random_form(e, rng, lo, hi) for _ in range(2 * d)] for e in degs]
        try:
            return HomogeneousCurve.from_columns(d, cols)
        except CurveError:
            continue


def random_split_curve(exponents, rng: random.Random, twist: bool = True) -> HomogeneousCurve:
    """A curve with prescribed splitting exponents.

    Direct sum of the coprime pairs (p_i, q_i) of degree a_i placed in rows i
    and d+i, optionally moved by a random element of GL(2d).
    """
    d = len(exponents)
    cols = []
    for i, a in enumerate(exponents):
        while True:
            p, q = random_form(a, rng), random_form(a, rng)
            if p.is_zero() and q.is_zero():
                continue
            g = homo_gcd([p, q])
            if g.degree == 0:
                break
        col = [HomoPoly.zero(a) for _ in range(2 * d)]
        col[i], col[d + i] = p, q
        cols.append(col)
    c = HomogeneousCurve.from_columns(d, cols)
    if twist:
        c = moebius_apply(random_group_element(d, rng, -3, 3), c)
    return c


def random_poly_chart(d: int, rng: random.Random, max_degree: int = 2, lo: int = -3, hi: int = 3) -> RatMatrix:
    """Random polynomial d x d matrix function with det(y') not identically zero."""
    while True:
        y = RatMatrix([[RatFun.from_poly(random_poly(rng.randint(0, max_degree), rng, lo, hi)) for _ in range(d)]
                       for _ in range(d)])
        if not y.derivative().det().is_zero():
            return y


def random_ratfun(rng: random.Random, max_degree: int = 3, lo: int = -4, hi: int = 4) -> RatFun:
    """Random nonconstant rational function."""
    while True:
        num = random_poly(rng.randint(0, max_degree), rng, lo, hi)
        den = random_poly(rng.randint(0, max_degree), rng, lo, hi)
        if den.is_zero():
            continue
        f = RatFun(num, den)
        if not f.derivative().is_zero():
            return f


def random_moebius_chart(d: int, rng: random.Random, lo: int = -5, hi: int = 5):
    """(g, y) with y = (Ax+B)(Cx+D)^-1 and Cx+D generically invertible."""
    x_eye = RatMatrix.scalar(d, RatFun.x())
    while True:
        g = random_group_element(d, rng, lo, hi)
        try:
            return g, act_on_chart(g, x_eye)
        except ZeroDivisionError:
            continue
