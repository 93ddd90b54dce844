"""Univariate rational functions over Q, kept in lowest terms with a monic denominator.

With that normalization two rational functions are equal exactly when their
(numerator, denominator) pairs are equal.
"""

from __future__ import annotations

from .poly import Poly, poly_gcd
from .scalar import ONE, ZERO, Q

_ONE_POLY = Poly._raw([ONE])


def ratfun_reduce(n: Poly, d: Poly) -> "RatFun":
    """n/d in lowest terms with a monic denominator."""
    if d.is_zero():
        raise ZeroDivisionError("division by zero rational function")
    if n.is_zero():
        return RatFun._raw(Poly._raw([]), _ONE_POLY)
    if not d.is_constant():
        g = poly_gcd(n, d)
        if not g.is_one():
            n, d = n.exact_div(g), d.exact_div(g)
    lc = d.lc
    if lc != 1:
        inv = ONE / lc
        n, d = n * inv, d * inv
    return RatFun._raw(n, d)


class RatFun:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Poly):
            num = Poly([num]) if not isinstance(num, (list, tuple)) else Poly(num)
        if den is None:
            den = _ONE_POLY
        elif not isinstance(den, Poly):
            den = Poly([den]) if not isinstance(den, (list, tuple)) else Poly(den)
        r = ratfun_reduce(num, den)
        self.num, self.den = r.num, r.den

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatFun":
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFun":
        return cls._raw(p, _ONE_POLY)

    @classmethod
    def constant(cls, c) -> "RatFun":
        return cls._raw(Poly._raw([Q(c)]), _ONE_POLY)

    @classmethod
    def x(cls) -> "RatFun":
        return cls._raw(Poly.x(), _ONE_POLY)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Poly):
            return self.den.is_one() and self.num == other
        if isinstance(other, (int, type(ZERO))):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFun({self})"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        n, d = str(self.num), str(self.den)
        if sum(1 for a in self.num.coeffs if a) > 1 or n.startswith("-") or "/" in n:
            n = f"({n})"
        if sum(1 for a in self.den.coeffs if a) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, Poly):
            return RatFun._raw(other, _ONE_POLY)
        if isinstance(other, (int, type(ZERO))):
            return RatFun._raw(Poly._raw([Q(other)]), _ONE_POLY)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.is_one() and d.is_one():
            return RatFun._raw(a + c, _ONE_POLY)
        if b == d:
            return ratfun_reduce(a + c, b)
        g = poly_gcd(b, d)
        if g.is_one():
            # coprime denominators give a reduced sum
            return RatFun._raw(a * d + c * b, b * d)
        b1, d1 = b.exact_div(g), d.exact_div(g)
        n = a * d1 + c * b1
        if n.is_zero():
            return RatFun._raw(n, _ONE_POLY)
        h = poly_gcd(n, g)
        if not h.is_one():
            n, g = n.exact_div(h), g.exact_div(h)
        return RatFun._raw(n, b1 * d1 * g)

    __radd__ = __add__

    def __neg__(self):
        return RatFun._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, type(ZERO))):
            c = Q(other)
            if not c:
                return RatFun._raw(Poly._raw([]), _ONE_POLY)
            return RatFun._raw(self.num * c, self.den)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a or not c:
            return RatFun._raw(Poly._raw([]), _ONE_POLY)
        if not d.is_one():
            g = poly_gcd(a, d)
            if not g.is_one():
                a, d = a.exact_div(g), d.exact_div(g)
        if not b.is_one():
            g = poly_gcd(c, b)
            if not g.is_one():
                c, b = c.exact_div(g), b.exact_div(g)
        return RatFun._raw(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if not self.num:
            raise ZeroDivisionError("division by zero rational function")
        lc = self.num.lc
        inv = ONE / lc
        return RatFun._raw(self.den * inv, self.num * inv)

    def __truediv__(self, other):
        if isinstance(other, (int, type(ZERO))):
            return self * (ONE / Q(other))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFun._raw(self.num ** n, self.den ** n)

    def derivative(self) -> "RatFun":
        a, b = self.num, self.den
        if b.is_one():
            return RatFun._raw(a.derivative(), _ONE_POLY)
        # (a/b)' = (a' b - a b') / b^2; with b = g*h, h = b/gcd(b, b'),
        # the quotient reduces over b*h instead of b^2
        db = b.derivative()
        g = poly_gcd(b, db)
        h = b.exact_div(g)
        n = a.derivative() * h - a * db.exact_div(g)
        return ratfun_reduce(n, b * h)

    def __call__(self, x):
        x = Q(x)
        d = self.den(x)
        if not d:
            raise ZeroDivisionError(f"rational function has a pole at {x}")
        return self.num(x) / d

    def compose_moebius(self, alpha, beta, gamma, delta) -> "RatFun":
        """Return r((alpha x + beta)/(gamma x + delta))."""
        a = Poly._raw([Q(beta), Q(alpha)])
        c = Poly._raw([Q(delta), Q(gamma)])
        n, d = self.num, self.den
        e = max(len(n.coeffs), len(d.coeffs)) - 1
        e = max(e, 0)
        apow = [Poly._raw([ONE])]
        cpow = [Poly._raw([ONE])]
        for _ in range(e):
            apow.append(apow[-1] * a)
            cpow.append(cpow[-1] * c)

        def homog(p: Poly) -> Poly:
            acc = Poly._raw([])
            for k, coeff in enumerate(p.coeffs):
                if coeff:
                    acc = acc + (apow[k] * cpow[e - k]) * coeff
            return acc

        # the common factor c^e cancels between numerator and denominator
        return ratfun_reduce(homog(n), homog(d))
