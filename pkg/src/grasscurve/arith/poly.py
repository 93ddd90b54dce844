"""Dense univariate polynomials over Q.

A polynomial a_0 + a_1 x + ... + a_n x^n is stored as the tuple
(a_0, ..., a_n) of mpq with a_n != 0; the zero polynomial is ().
The degree of the zero polynomial is ``None``, never an integer.
"""

from __future__ import annotations

from .scalar import ONE, ZERO, Q, rational, to_str


def _strip(c: list) -> tuple:
    while c and not c[-1]:
        c.pop()
    return tuple(c)


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip([rational(a) for a in coeffs])

    @classmethod
    def _raw(cls, coeffs) -> "Poly":
        # trusted constructor: entries are already mpq
        p = object.__new__(cls)
        p.coeffs = _strip(list(coeffs))
        return p

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls._raw([rational(c)])

    @classmethod
    def monomial(cls, n: int, c=ONE) -> "Poly":
        return cls._raw([ZERO] * n + [rational(c)])

    @classmethod
    def x(cls) -> "Poly":
        return cls._raw([ZERO, ONE])

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else ZERO

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, type(ZERO))):
            return self.coeffs == _strip([Q(other)])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return format_terms(
            [(c, n) for n, c in enumerate(self.coeffs)][::-1],
            lambda n: "" if n == 0 else ("x" if n == 1 else f"x^{n}"),
        )

    # -- ring operations -----------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, type(ZERO))):
            return Poly._raw([Q(other)])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for i, v in enumerate(b):
            c[i] += v
        return Poly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-a for a in self.coeffs])

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
            other = Q(other)
            if not other:
                return Poly._raw([])
            return Poly._raw([a * other for a in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw([])
        c = [ZERO] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    c[i + j] += u * v
        return Poly._raw(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = Poly._raw([ONE]), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "Poly":
        return self * Q(c)

    def __divmod__(self, other: "Poly"):
        if not isinstance(other, Poly):
            other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        if len(r) <= db:
            return Poly._raw([]), self
        inv = ONE / b[-1]
        q = [ZERO] * (len(r) - db)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if c:
                c *= inv
                q[k - db] = c
                for j in range(db):
                    r[k - db + j] -= c * b[j]
            r[k] = ZERO
        return Poly._raw(q), Poly._raw(r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self) -> "Poly":
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        inv = ONE / self.coeffs[-1]
        return Poly._raw([a * inv for a in self.coeffs])

    def derivative(self) -> "Poly":
        return Poly._raw([n * a for n, a in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = ZERO
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def compose(self, other: "Poly") -> "Poly":
        acc = Poly._raw([])
        for a in reversed(self.coeffs):
            acc = acc * other + Poly._raw([a])
        return acc

    def homogeneous_values(self, e: int, s, t):
        """Value of t^e * p(s/t), i.e. the degree-e homogenization at (s, t)."""
        acc = ZERO
        tp = ONE
        # sum a_n s^n t^(e-n), evaluated by Horner in s with t powers
        for n in range(e, -1, -1):
            a = self.coeffs[n] if n < len(self.coeffs) else ZERO
            acc = acc * s + a * tp
            tp *= t
        return acc

    def valuation(self) -> int | None:
        """Multiplicity of the root x = 0; None for the zero polynomial."""
        for n, a in enumerate(self.coeffs):
            if a:
                return n
        return None


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    a, b = p.monic(), q.monic()
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    while b.coeffs:
        if len(b.coeffs) == 1:
            return Poly._raw([ONE])
        a, b = b, (a % b).monic()
    return a


def poly_lcm(p: Poly, q: Poly) -> Poly:
    if p.is_zero() or q.is_zero():
        return Poly._raw([])
    return (p * q.exact_div(poly_gcd(p, q))).monic()


def format_terms(terms, render_monomial) -> str:
    """Render [(coefficient, key), ...] in the given order as ``a*m + ...``."""
    parts = []
    for c, key in terms:
        if not c:
            continue
        mono = render_monomial(key)
        mag = -c if c < 0 else c
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{to_str(mag)}*{mono}"
        else:
            body = to_str(mag)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"
