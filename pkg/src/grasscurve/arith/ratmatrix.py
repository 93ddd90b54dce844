"""Dense matrices of univariate rational functions."""

from __future__ import annotations

from .poly import Poly
from .ratfun import RatFun
from .scalar import ZERO, Q

_ZERO_RF = RatFun.constant(0)
_ONE_RF = RatFun.constant(1)


class SingularMatrixError(ZeroDivisionError):
    pass


def _rf(v) -> RatFun:
    if isinstance(v, RatFun):
        return v
    if isinstance(v, Poly):
        return RatFun.from_poly(v)
    return RatFun.constant(v)


class RatMatrix:
    """Immutable rows x cols matrix of RatFun entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(_rf(v) for v in row) for row in entries)
        if not entries or not entries[0]:
            raise ValueError("matrix must have positive dimensions")
        if any(len(r) != len(entries[0]) for r in entries):
            raise ValueError("ragged matrix")
        self.entries = entries
        self.rows = len(entries)
        self.cols = len(entries[0])

    @classmethod
    def _raw(cls, entries) -> "RatMatrix":
        m = object.__new__(cls)
        m.entries = tuple(tuple(r) for r in entries)
        m.rows = len(m.entries)
        m.cols = len(m.entries[0])
        return m

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls._raw([[_ONE_RF if i == j else _ZERO_RF for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, r: int, c: int) -> "RatMatrix":
        return cls._raw([[_ZERO_RF] * c for _ in range(r)])

    @classmethod
    def scalar(cls, n: int, f) -> "RatMatrix":
        f = _rf(f)
        return cls._raw([[f if i == j else _ZERO_RF for j in range(n)] for i in range(n)])

    @classmethod
    def from_scalars(cls, a) -> "RatMatrix":
        return cls._raw([[RatFun.constant(v) for v in row] for row in a])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "RatMatrix(" + repr([[str(e) for e in r] for r in self.entries]) + ")"

    def to_strings(self) -> list[list[str]]:
        return [[str(e) for e in r] for r in self.entries]

    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self.entries for e in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix._raw([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._same_shape(other)
        return RatMatrix._raw([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)])

    def __neg__(self):
        return RatMatrix._raw([[-a for a in r] for r in self.entries])

    def _same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        ocols = list(zip(*other.entries))
        out = []
        for row in self.entries:
            out_row = []
            for col in ocols:
                acc = _ZERO_RF
                for a, b in zip(row, col):
                    if a.num and b.num:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return RatMatrix._raw(out)

    def scale(self, f) -> "RatMatrix":
        f = _rf(f)
        return RatMatrix._raw([[a * f for a in r] for r in self.entries])

    def transpose(self) -> "RatMatrix":
        return RatMatrix._raw(list(zip(*self.entries)))

    def derivative(self) -> "RatMatrix":
        return RatMatrix._raw([[a.derivative() for a in r] for r in self.entries])

    def map(self, fn) -> "RatMatrix":
        return RatMatrix._raw([[fn(a) for a in r] for r in self.entries])

    def __call__(self, x) -> list[list]:
        """Evaluate at a rational point to a scalar matrix."""
        x = Q(x)
        return [[a(x) for a in r] for r in self.entries]

    def common_denominator(self) -> Poly:
        from .poly import poly_lcm

        d = Poly.constant(1)
        for r in self.entries:
            for a in r:
                if not a.den.is_one():
                    d = poly_lcm(d, a.den)
        return d

    def det(self) -> RatFun:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self.entries]
        n = self.rows
        result = _ONE_RF
        for c in range(n):
            p = _pick_pivot(m, c, c)
            if p is None:
                return _ZERO_RF
            if p != c:
                m[c], m[p] = m[p], m[c]
                result = -result
            piv = m[c][c]
            result = result * piv
            inv = piv.inverse()
            for i in range(c + 1, n):
                f = m[i][c]
                if f:
                    f = f * inv
                    row, prow = m[i], m[c]
                    for j in range(c + 1, n):
                        if prow[j]:
                            row[j] = row[j] - f * prow[j]
        return result

    def inverse(self) -> "RatMatrix":
        """Exact inverse by Gauss-Jordan elimination over Q(x)."""
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        m = [list(r) + [_ONE_RF if i == j else _ZERO_RF for j in range(n)]
             for i, r in enumerate(self.entries)]
        for c in range(n):
            p = _pick_pivot(m, c, c)
            if p is None:
                raise SingularMatrixError("singular matrix function")
            m[c], m[p] = m[p], m[c]
            inv = m[c][c].inverse()
            prow = [a * inv if a.num else a for a in m[c]]
            m[c] = prow
            nz = [j for j in range(c + 1, 2 * n) if prow[j].num]
            for i in range(n):
                if i != c:
                    f = m[i][c]
                    if f.num:
                        row = m[i]
                        for j in nz:
                            row[j] = row[j] - f * prow[j]
                        row[c] = _ZERO_RF
        return RatMatrix._raw([r[n:] for r in m])


def _complexity(f: RatFun) -> int:
    return len(f.num.coeffs) + len(f.den.coeffs)


def _pick_pivot(m, col: int, start: int):
    best, best_size = None, None
    for i in range(start, len(m)):
        a = m[i][col]
        if a.num:
            size = _complexity(a)
            if best is None or size < best_size:
                best, best_size = i, size
    return best


def ratmatrix_inverse(m: RatMatrix) -> RatMatrix:
    return m.inverse()


def scalar_matrix_is_zero(a) -> bool:
    return all(v == ZERO for row in a for v in row)
