"""Rational scalars.

Scalars are ``gmpy2.mpq`` values: arbitrary precision, always stored in
lowest terms with a positive denominator, zero as 0/1.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

Q = mpq
ZERO = mpq(0)
ONE = mpq(1)


def rational(value) -> mpq:
    """Coerce an int, Fraction, mpq or ``"a/b"`` string to a scalar."""
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational literal")
        return mpq(text)
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Rational)) or type(value) is type(ZERO):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def to_str(q) -> str:
    """Canonical text form: ``-3/2``, ``0``, ``7``."""
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
