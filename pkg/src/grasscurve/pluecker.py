"""Plücker coordinates, Plücker degree and the Klein quadric for d = 2."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .arith import HomoPoly, homo_gcd, linalg
from .curve import HomogeneousCurve


class KleinError(ValueError):
    pass


def row_label(i: int, d: int) -> str:
    """Row i of C^2 (x) C^d, labelled '11', ..., '1d', '21', ..., '2d'."""
    return f"{i // d + 1}{i % d + 1}"


@dataclass(frozen=True)
class PlueckerVector:
    d: int
    coords: tuple
    degree: int

    @property
    def subsets(self) -> list[tuple]:
        return list(combinations(range(2 * self.d), self.d))

    def labels(self) -> list[str]:
        return [",".join(row_label(i, self.d) for i in rows) for rows in self.subsets]

    def __getitem__(self, rows) -> HomoPoly:
        return self.coords[self.subsets.index(tuple(sorted(rows)))]

    def __call__(self, s, t) -> list:
        return [f(s, t) for f in self.coords]

    def is_proportional(self, other: "PlueckerVector") -> bool:
        if self.d != other.d or self.degree != other.degree:
            return False
        k = next(i for i, f in enumerate(self.coords) if not f.is_zero())
        a, b = self.coords[k], other.coords[k]
        if b.is_zero():
            return False
        return all(f * b == g * a for f, g in zip(self.coords, other.coords))


@lru_cache(maxsize=256)
def pluecker_vector(c: HomogeneousCurve) -> PlueckerVector:
    """All d x d minors, in lexicographic order of row subsets, with their common factor removed."""
    minors = [c.minor(rows) for rows in combinations(range(2 * c.d), c.d)]
    g = homo_gcd(minors)
    coords = tuple(m.exact_div(g) for m in minors)
    return PlueckerVector(c.d, coords, sum(c.column_degrees) - g.degree)


def pluecker_degree(c: HomogeneousCurve) -> int:
    return pluecker_vector(c).degree


def _require_d2(c: HomogeneousCurve):
    if c.d != 2:
        raise KleinError("Klein quadric defined only for d=2")


def klein_quadric_residual(c: HomogeneousCurve) -> HomoPoly:
    """z11,12 z21,22 - z11,21 z12,22 + z11,22 z12,21 on the curve (rows 11, 12, 21, 22)."""
    _require_d2(c)
    z = pluecker_vector(c).coords
    # lexicographic order: 01, 02, 03, 12, 13, 23
    return z[0] * z[5] - z[1] * z[4] + z[2] * z[3]


def morita_plane_residuals(c: HomogeneousCurve) -> tuple:
    """The linear forms z11,21, z12,22 and z11,22 + z12,21 on the curve."""
    _require_d2(c)
    z = pluecker_vector(c).coords
    return (z[1], z[4], z[2] + z[3])


def compound_matrix(g, d: int) -> list[list]:
    """The d-th compound of a 2d x 2d scalar matrix, indexed by lexicographic d-subsets."""
    subsets = list(combinations(range(2 * d), d))
    return [[linalg.det([[g[i][j] for j in cols] for i in rows]) for cols in subsets] for rows in subsets]
