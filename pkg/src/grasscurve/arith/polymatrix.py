"""Determinants of square matrices with Poly entries."""

from __future__ import annotations

from .poly import Poly
from .scalar import ONE


def poly_det(m) -> Poly:
    """Fraction-free Bareiss elimination; every division is exact."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return Poly._raw([ONE])
    sign = 1
    prev = Poly._raw([ONE])
    for k in range(n - 1):
        if a[k][k].is_zero():
            p = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if p is None:
                return Poly._raw([])
            a[k], a[p] = a[p], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row, prow = a[i], a[k]
            for j in range(k + 1, n):
                v = row[j] * piv
                if aik and prow[j]:
                    v = v - aik * prow[j]
                row[j] = v if prev.is_one() else v.exact_div(prev)
            row[k] = Poly._raw([])
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d
