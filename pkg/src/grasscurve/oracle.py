"""Brute-force checks kept independent of the symbolic pipeline.

The h0 counts here never touch Plücker coordinates or minors: a degree-m
vector v lies in the saturated module iff v(p) is in the column span at
enough points p where the curve has full rank (the (d+1)-minors of [C | v]
are forms of degree m + sum(column degrees), so vanishing at one more point
than that forces them to vanish identically).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice

from .arith import ZERO, Q, RatFun
from .arith import linalg
from .curve import HomogeneousCurve, projective_points
from .splitting import SplittingType


class ProfileError(ValueError):
    pass


@dataclass(frozen=True)
class H0Sequence:
    """dims[m] = h0(f*S(m)) for m = 0 .. len(dims) - 1."""

    d: int
    dims: tuple


def regular_points(curves, n: int) -> list[tuple]:
    """The first n points of the fixed point sequence where every curve has full rank."""
    curves = list(curves)
    pts = (p for p in projective_points() if all(linalg.rank(c.evaluate(p)) == c.d for c in curves))
    return list(islice(pts, n))


def _h0_at(c: HomogeneousCurve, m: int, kernels) -> int:
    n = 2 * c.d
    rows = []
    for (s, t), ker in kernels:
        mono = [s ** (m - a) * t ** a for a in range(m + 1)]
        for u in ker:
            row = [ZERO] * (n * (m + 1))
            for k, uk in enumerate(u):
                if uk:
                    for a, w in enumerate(mono):
                        row[k * (m + 1) + a] = uk * w
            rows.append(row)
    return n * (m + 1) - linalg.rank(rows)


def _point_kernels(c: HomogeneousCurve, npts: int):
    out = []
    for p in regular_points([c], npts):
        # left kernel of C(p): vectors u with u . C(p) = 0
        out.append((p, linalg.nullspace(linalg.transpose(c.evaluate(p)))))
    return out


def h0_sequence(c: HomogeneousCurve, m_max: int) -> H0Sequence:
    base = sum(c.column_degrees)
    kernels = _point_kernels(c, m_max + base + 1)
    dims = []
    for m in range(m_max + 1):
        dims.append(_h0_at(c, m, kernels[: m + base + 1]))
    return H0Sequence(c.d, tuple(dims))


def h0_profile(c: HomogeneousCurve) -> H0Sequence:
    """h0 counts up to the first degree at which all d summands contribute."""
    base = sum(c.column_degrees)
    kernels = _point_kernels(c, 2 * base + 1)
    dims = []
    for m in range(base + 1):
        dims.append(_h0_at(c, m, kernels[: m + base + 1]))
        prev = dims[-2] if m else 0
        if dims[-1] - prev == c.d:
            return H0Sequence(c.d, tuple(dims))
    raise ProfileError("h0 increments never reached d within the degree bound")


def splitting_from_h0(seq: H0Sequence) -> SplittingType:
    """Invert dims[m] = sum_i max(0, m - a_i + 1) using first and second differences."""
    d, dims = seq.d, list(seq.dims)
    incr = [dims[0]] + [b - a for a, b in zip(dims, dims[1:])]
    if any(x < 0 or x > d for x in incr):
        raise ProfileError("not an h0 profile")
    if not incr or incr[-1] != d:
        raise ProfileError("not an h0 profile")
    exps = []
    prev = 0
    for m, x in enumerate(incr):
        if x < prev:
            raise ProfileError("not an h0 profile")
        exps.extend([m] * (x - prev))
        prev = x
    return SplittingType.from_exponents(exps)


def classical_schwarzian(f: RatFun) -> RatFun:
    """f'''/f' - (3/2)(f''/f')^2."""
    f1 = f.derivative()
    if f1.is_zero():
        raise ValueError("Schwarzian of a constant function")
    f2 = f1.derivative()
    f3 = f2.derivative()
    r = f2 / f1
    return f3 / f1 - r * r * Q(3, 2)


def spans_equal(m1, m2) -> bool:
    r1, r2 = linalg.rank(m1), linalg.rank(m2)
    if r1 != r2:
        return False
    both = [list(a) + list(b) for a, b in zip(m1, m2)]
    return linalg.rank(both) == r1


def subspace_equal_at_samples(c1: HomogeneousCurve, c2: HomogeneousCurve, points) -> bool:
    if c1.d != c2.d:
        return False
    return all(spans_equal(c1.evaluate(p), c2.evaluate(p)) for p in points)

