"""Homogeneous bivariate polynomials in (s, t) over Q.

A form of degree e is the tuple of e+1 coefficients of
s^e, s^(e-1) t, ..., t^e.  Setting t = 1 identifies it with a univariate
polynomial in x = s/t of degree <= e; most arithmetic goes through that
identification, with the homogeneous degree carried alongside.
"""

from __future__ import annotations

from .poly import Poly, format_terms, poly_gcd
from .scalar import ONE, ZERO, Q, rational


class HomoPoly:
    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs=None):
        if degree < 0:
            raise ValueError("homogeneous degree must be nonnegative")
        if coeffs is None:
            coeffs = [ZERO] * (degree + 1)
        coeffs = tuple(rational(c) for c in coeffs)
        if len(coeffs) != degree + 1:
            raise ValueError(f"degree {degree} form needs {degree + 1} coefficients")
        self.degree = degree
        self.coeffs = coeffs

    @classmethod
    def zero(cls, degree: int) -> "HomoPoly":
        return cls(degree)

    @classmethod
    def from_poly(cls, p: Poly, degree: int) -> "HomoPoly":
        """Homogenize p(x) to degree ``degree`` (x = s/t)."""
        if p.degree is not None and p.degree > degree:
            raise ValueError(f"cannot homogenize degree {p.degree} polynomial to degree {degree}")
        c = list(p.coeffs) + [ZERO] * (degree + 1 - len(p.coeffs))
        h = object.__new__(cls)
        h.degree = degree
        h.coeffs = tuple(reversed(c))
        return h

    @classmethod
    def from_terms(cls, terms: dict) -> "HomoPoly":
        """Build from {(i, j): c} meaning c * s^i t^j; all i + j must agree."""
        nonzero = {k: v for k, v in terms.items() if v}
        degrees = {i + j for (i, j) in nonzero}
        if len(degrees) > 1:
            raise ValueError("polynomial is not homogeneous")
        if not degrees:
            return cls(0)
        e = degrees.pop()
        coeffs = [ZERO] * (e + 1)
        for (i, j), c in nonzero.items():
            coeffs[j] = Q(c)
        return cls(e, coeffs)

    def dehomogenize(self) -> Poly:
        return Poly._raw(list(reversed(self.coeffs)))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, HomoPoly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, self.coeffs)) if not self.is_zero() else 0

    def __repr__(self):
        return f"HomoPoly({self.degree}, {self})"

    def __str__(self):
        e = self.degree

        def mono(k):
            i, j = e - k, k
            parts = []
            if i:
                parts.append("s" if i == 1 else f"s^{i}")
            if j:
                parts.append("t" if j == 1 else f"t^{j}")
            return "*".join(parts)

        return format_terms(list(zip(self.coeffs, range(e + 1))), mono)

    def __add__(self, other: "HomoPoly") -> "HomoPoly":
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if other.degree != self.degree:
            raise ValueError("cannot add forms of different degree")
        h = object.__new__(HomoPoly)
        h.degree = self.degree
        h.coeffs = tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        return h

    def __neg__(self):
        h = object.__new__(HomoPoly)
        h.degree = self.degree
        h.coeffs = tuple(-a for a in self.coeffs)
        return h

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HomoPoly):
            p = self.dehomogenize() * other.dehomogenize()
            return HomoPoly.from_poly(p, self.degree + other.degree)
        if isinstance(other, (int, type(ZERO))):
            c = Q(other)
            h = object.__new__(HomoPoly)
            h.degree = self.degree
            h.coeffs = tuple(a * c for a in self.coeffs)
            return h
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, s, t):
        return self.dehomogenize().homogeneous_values(self.degree, Q(s), Q(t))

    def t_valuation(self) -> int | None:
        """Exponent of the largest power of t dividing the form."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def exact_div(self, other: "HomoPoly") -> "HomoPoly":
        if other.is_zero():
            raise ZeroDivisionError("division by the zero form")
        if self.is_zero():
            return HomoPoly.zero(max(self.degree - other.degree, 0))
        e = self.degree - other.degree
        q = self.dehomogenize().exact_div(other.dehomogenize())
        if e < 0 or (q.degree is not None and q.degree > e):
            raise ArithmeticError(f"{other} does not divide {self}")
        return HomoPoly.from_poly(q, e)

    def substitute(self, alpha, beta, gamma, delta) -> "HomoPoly":
        """Return p(alpha*s + beta*t, gamma*s + delta*t)."""
        a = Poly._raw([Q(beta), Q(alpha)])
        c = Poly._raw([Q(delta), Q(gamma)])
        e = self.degree
        # sum_k coeff_k (a)^(e-k) (c)^k, in the affine variable
        apow = [Poly._raw([ONE])]
        cpow = [Poly._raw([ONE])]
        for _ in range(e):
            apow.append(apow[-1] * a)
            cpow.append(cpow[-1] * c)
        acc = Poly._raw([])
        for k, coeff in enumerate(self.coeffs):
            if coeff:
                acc = acc + (apow[e - k] * cpow[k]) * coeff
        return HomoPoly.from_poly(acc, e)

    def normalized(self) -> "HomoPoly":
        """Scale so that the first nonzero coefficient (highest s power) is 1."""
        for c in self.coeffs:
            if c:
                return self * (ONE / c) if c != 1 else self
        return self


def homo_gcd(forms) -> HomoPoly:
    """Greatest common divisor of a family of forms, normalized; 0 if all vanish."""
    forms = [f for f in forms if not f.is_zero()]
    if not forms:
        return HomoPoly.zero(0)
    tpow = min(f.t_valuation() for f in forms)
    g = Poly._raw([])
    for f in forms:
        g = poly_gcd(g, f.dehomogenize())
        if g.is_one():
            break
    g_deg = g.degree
    # t^tpow * homogenized affine gcd
    return HomoPoly.from_poly(g, g_deg + tpow).normalized()
