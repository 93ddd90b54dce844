"""Splitting type of the pulled-back tautological bundle via minimal polynomial bases.

A homogeneous vector v of degree m lies in the saturated column module iff it
lies in the column span of the curve at a generic point.  Fix row set J
with nonzero Plücker coordinate p_J.  For each row i outside J the vector
r_i with entries +-p_{(J+i) - k} on rows k of J+i annihilates every column
(Laplace expansion with a repeated column), and these d rows span the left
kernel over Q(x).  So membership is the linear condition r_i . v = 0 for all
i, on the coefficients of v.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import HomoPoly, ZERO
from .arith import linalg
from .curve import HomogeneousCurve
from .pluecker import pluecker_vector


@dataclass(frozen=True)
class SplittingType:
    exponents: tuple
    width: int

    @classmethod
    def from_exponents(cls, exponents) -> "SplittingType":
        a = tuple(sorted(int(e) for e in exponents))
        if a and a[0] < 0:
            raise ValueError("splitting exponents must be nonnegative")
        return cls(a, a[-1] - a[0] if a else 0)

    @property
    def degree(self) -> int:
        return sum(self.exponents)


def annihilator(c: HomogeneousCurve) -> list[list[HomoPoly]]:
    """d rows of forms, each killing every column of c, spanning the generic left kernel."""
    pv = pluecker_vector(c)
    n, d = 2 * c.d, c.d
    subsets = pv.subsets
    index = {rows: k for k, rows in enumerate(subsets)}
    J = next(rows for rows, f in zip(subsets, pv.coords) if not f.is_zero())
    out = []
    for i in range(n):
        if i in J:
            continue
        I = tuple(sorted(J + (i,)))
        row = [HomoPoly.zero(pv.degree) for _ in range(n)]
        for pos, k in enumerate(I):
            minor = pv.coords[index[tuple(r for r in I if r != k)]]
            row[k] = minor if pos % 2 == 0 else -minor
        out.append(row)
    assert len(out) == d
    return out


def membership_system(ann: list[list[HomoPoly]], m: int) -> list[list]:
    """Rows of the linear map sending the coefficients of a degree-m vector to r . v.

    Unknown k*(m+1) + a is the coefficient of s^(m-a) t^a in entry k.
    """
    n = len(ann[0])
    width = n * (m + 1)
    rows = []
    for r in ann:
        D = r[0].degree
        block = [[ZERO] * width for _ in range(D + m + 1)]
        for k, f in enumerate(r):
            if f.is_zero():
                continue
            for b, coeff in enumerate(f.coeffs):
                if coeff:
                    for a in range(m + 1):
                        block[a + b][k * (m + 1) + a] = coeff
        rows.extend(block)
    return rows


def vector_to_forms(v, n: int, m: int) -> list[HomoPoly]:
    return [HomoPoly(m, v[k * (m + 1):(k + 1) * (m + 1)]) for k in range(n)]


def _shifted(forms, e: int, m: int, u: int) -> list:
    """Coefficient vector of s^(m-e-u) t^u * v for v of degree e."""
    out = []
    for f in forms:
        block = [ZERO] * (m + 1)
        if not f.is_zero():
            for b, coeff in enumerate(f.coeffs):
                block[u + b] = coeff
        out.extend(block)
    return out


def module_kernel(ann, n: int, m: int) -> list[list]:
    """RREF basis of the degree-m part of the saturated module."""
    basis = linalg.nullspace(membership_system(ann, m), n * (m + 1))
    if not basis:
        return []
    return linalg.rref(basis)[0]


def minimal_basis(c: HomogeneousCurve):
    """Minimal basis of the saturated column module and its sorted degrees.

    Degrees are scanned upward; at each degree the canonical kernel basis is
    filtered greedily against the multiples of generators already found.
    """
    d, n = c.d, 2 * c.d
    ann = annihilator(c)
    cap = sum(c.column_degrees)
    found: list[tuple[int, list[HomoPoly]]] = []
    m = 0
    while len(found) < d:
        if m > cap:
            raise RuntimeError(f"minimal basis search exceeded degree cap {cap}")
        kernel = module_kernel(ann, n, m)
        if len(kernel) > sum(m - e + 1 for e, _ in found):
            span = linalg.EchelonBasis(n * (m + 1))
            for e, forms in found:
                for u in range(m - e + 1):
                    span.add(_shifted(forms, e, m, u))
            for v in kernel:
                if len(found) == d:
                    break
                if span.add(v):
                    found.append((m, vector_to_forms(v, n, m)))
        m += 1
    columns = [forms for _, forms in found]
    degrees = [e for e, _ in found]
    sat = HomogeneousCurve(d, tuple(degrees), tuple(tuple(columns[j][i] for j in range(d)) for i in range(n)))
    return sat, SplittingType.from_exponents(degrees)


def splitting_type(c: HomogeneousCurve) -> SplittingType:
    return minimal_basis(c)[1]


def width(c: HomogeneousCurve) -> int:
    return splitting_type(c).width
