"""Rational curves P^1 -> G(d, 2d) as 2d x d matrices of binary forms.

A point of the Grassmannian is the column span of a 2d x d matrix.  Rows are
ordered 1(x)1, ..., 1(x)d, 2(x)1, ..., 2(x)d, so the Morita curve is the
stacked matrix [s*I; t*I].  In the affine coordinate x = s/t the top d rows
form L(x) and the bottom d rows R(x); the bottom chart reads the curve as
y = L R^-1 and the top chart as y = R L^-1.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, count
from math import gcd

from .arith import HomoPoly, Poly, Q, RatMatrix, linalg
from .arith.poly import poly_lcm
from .arith.polymatrix import poly_det
from .parsing import ParseError, parse_bivariate, parse_ratfun


class CurveError(ValueError):
    pass


class Chart(enum.Enum):
    BOTTOM = "bottom"
    TOP = "top"


def projective_points():
    """Distinct points of P^1: (0,1), (1,1), (1,0), (2,1), (1,2), (3,1), (1,3), (3,2), ..."""
    yield (Q(0), Q(1))
    yield (Q(1), Q(1))
    yield (Q(1), Q(0))
    for n in count(2):
        for a in range(1, n):
            if gcd(a, n) == 1:
                yield (Q(n), Q(a))
                yield (Q(a), Q(n))


@dataclass(frozen=True, eq=True)
class HomogeneousCurve:
    """Column j of ``matrix`` holds forms of degree ``column_degrees[j]``."""

    d: int
    column_degrees: tuple
    matrix: tuple

    def __post_init__(self):
        d = self.d
        if d < 1:
            raise CurveError("d must be positive")
        mat = tuple(tuple(row) for row in self.matrix)
        degs = tuple(int(e) for e in self.column_degrees)
        if len(mat) != 2 * d or any(len(r) != d for r in mat):
            raise CurveError(f"curve matrix must be {2 * d} x {d}")
        if len(degs) != d:
            raise CurveError("need one degree per column")
        fixed = []
        for row in mat:
            new_row = []
            for j, f in enumerate(row):
                if f.is_zero():
                    f = HomoPoly.zero(degs[j])
                elif f.degree != degs[j]:
                    raise CurveError(f"column {j} mixes degrees")
                new_row.append(f)
            fixed.append(tuple(new_row))
        object.__setattr__(self, "matrix", tuple(fixed))
        object.__setattr__(self, "column_degrees", degs)
        for j in range(d):
            if all(self.matrix[i][j].is_zero() for i in range(2 * d)):
                raise CurveError("degenerate curve matrix")
        if not self._has_generic_rank():
            raise CurveError("degenerate curve matrix")

    @classmethod
    def from_columns(cls, d: int, columns) -> "HomogeneousCurve":
        """Build from a list of d columns, each a list of 2d HomoPoly."""
        columns = [list(c) for c in columns]
        degs = []
        for j, col in enumerate(columns):
            nz = {f.degree for f in col if not f.is_zero()}
            if len(nz) > 1:
                raise CurveError(f"column {j} mixes degrees")
            degs.append(nz.pop() if nz else 0)
        matrix = [[columns[j][i] for j in range(len(columns))] for i in range(2 * d)]
        return cls(d, tuple(degs), tuple(map(tuple, matrix)))

    def _has_generic_rank(self) -> bool:
        # a nonzero d x d minor has degree sum(column_degrees); it cannot
        # vanish at more points than that
        npts = sum(self.column_degrees) + 1
        for _, pt in zip(range(npts), projective_points()):
            if linalg.rank(self.evaluate(pt)) == self.d:
                return True
        return False

    def columns(self) -> list[list[HomoPoly]]:
        return [[self.matrix[i][j] for i in range(2 * self.d)] for j in range(self.d)]

    @cached_property
    def affine(self) -> tuple:
        """The matrix with t = 1, as Poly entries in x = s/t."""
        return tuple(tuple(f.dehomogenize() for f in row) for row in self.matrix)

    def evaluate(self, point) -> list[list]:
        s, t = Q(point[0]), Q(point[1])
        return [[f(s, t) for f in row] for row in self.matrix]

    def minor(self, rows) -> HomoPoly:
        """d x d minor on the given rows, as a form of degree sum(column_degrees)."""
        p = poly_det([self.affine[i] for i in rows])
        return HomoPoly.from_poly(p, sum(self.column_degrees))

    def permute_rows(self, perm) -> "HomogeneousCurve":
        """Curve whose row i is row perm[i] of this one."""
        return HomogeneousCurve(self.d, self.column_degrees, tuple(self.matrix[p] for p in perm))

    def to_json(self) -> dict:
        return {"d": self.d, "columns": [[str(f) for f in col] for col in self.columns()]}

    def __str__(self):
        return json.dumps(self.to_json())


@dataclass(frozen=True)
class ChartMap:
    """The curve read in one big affine cell: a d x d matrix function y(x)."""

    d: int
    y: RatMatrix
    chart: Chart = Chart.BOTTOM
    domain_denominator: Poly = Poly.constant(1)

    @classmethod
    def from_matrix(cls, y: RatMatrix, chart: Chart = Chart.BOTTOM) -> "ChartMap":
        if not y.is_square():
            raise ValueError("chart map must be square")
        return cls(y.rows, y, chart, y.common_denominator())

    def in_domain(self, x) -> bool:
        return bool(self.domain_denominator(Q(x)))


def evaluate_subspace(c: HomogeneousCurve, point) -> list[list]:
    s, t = Q(point[0]), Q(point[1])
    if not s and not t:
        raise ValueError("not a point of the projective line")
    return c.evaluate((s, t))


def _blocks(c: HomogeneousCurve):
    d = c.d
    top = [list(r) for r in c.affine[:d]]
    bottom = [list(r) for r in c.affine[d:]]
    return top, bottom


def chart_map(c: HomogeneousCurve, chart: Chart = Chart.BOTTOM) -> ChartMap:
    top, bottom = _blocks(c)
    num, inv = (top, bottom) if chart is Chart.BOTTOM else (bottom, top)
    den = poly_det(inv)
    if den.is_zero():
        raise CurveError("curve does not meet this chart")
    y = RatMatrix(num) @ RatMatrix(inv).inverse()
    return ChartMap(c.d, y, chart, den.monic())


def visible_chart(c: HomogeneousCurve):
    """A chart in which the curve is visible.

    Returns (chart_map, perm): perm is None when the bottom or top chart of c
    itself works, otherwise a row permutation such that
    ``c.permute_rows(perm)`` meets the bottom chart.
    """
    for chart in (Chart.BOTTOM, Chart.TOP):
        try:
            return chart_map(c, chart), None
        except CurveError:
            pass
    n = 2 * c.d
    for rows in combinations(range(n), c.d):
        if not c.minor(rows).is_zero():
            rest = [i for i in range(n) if i not in rows]
            perm = tuple(rest) + tuple(rows)
            return chart_map(c.permute_rows(perm), Chart.BOTTOM), perm
    raise CurveError("degenerate curve matrix")


def saturate(c: HomogeneousCurve) -> HomogeneousCurve:
    from .splitting import minimal_basis

    return minimal_basis(c)[0]


# -- curve files -------------------------------------------------------------


def _entry(value, where: str) -> str:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError("entry must be a string or integer", where=where)
    return str(value)


def parse_curve(text: str) -> HomogeneousCurve:
    """Parse a curve file (``columns`` form or affine ``y`` form)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("curve file must hold an object", 1, 1)
    d = doc.get("d")
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise ParseError("'d' must be a positive integer", where="d")
    if "columns" in doc:
        return _parse_columns(d, doc["columns"])
    if "y" in doc:
        return _parse_affine(d, doc["y"])
    raise ParseError("curve file needs 'columns' or 'y'")


def _parse_columns(d: int, cols) -> HomogeneousCurve:
    if not isinstance(cols, list) or len(cols) != d:
        raise ParseError(f"'columns' must list {d} columns", where="columns")
    parsed = []
    for j, col in enumerate(cols):
        if not isinstance(col, list) or len(col) != 2 * d:
            raise ParseError(f"column must have {2 * d} entries", where=f"columns[{j}]")
        entries = []
        for i, raw in enumerate(col):
            where = f"columns[{j}][{i}]"
            try:
                terms = parse_bivariate(_entry(raw, where))
            except ParseError as exc:
                raise ParseError(exc.message, column=exc.column, where=where) from None
            try:
                entries.append(HomoPoly.from_terms(terms))
            except ValueError:
                raise CurveError(f"column {j} mixes degrees") from None
        parsed.append(entries)
    return HomogeneousCurve.from_columns(d, parsed)


def _parse_affine(d: int, rows) -> HomogeneousCurve:
    if not isinstance(rows, list) or len(rows) != d or any(not isinstance(r, list) or len(r) != d for r in rows):
        raise ParseError(f"'y' must be a {d} x {d} array", where="y")
    y = []
    for i, row in enumerate(rows):
        out = []
        for j, raw in enumerate(row):
            where = f"y[{i}][{j}]"
            try:
                out.append(parse_ratfun(_entry(raw, where)))
            except ParseError as exc:
                raise ParseError(exc.message, column=exc.column, where=where) from None
        y.append(out)
    return curve_from_chart(RatMatrix(y))


def curve_from_chart(y: RatMatrix) -> HomogeneousCurve:
    """Homogenize the bottom-chart map y: the columns of [y; I], denominators cleared."""
    d = y.rows
    columns = []
    for j in range(d):
        den = Poly.constant(1)
        for i in range(d):
            den = poly_lcm(den, y[i, j].den)
        polys = [(y[i, j].num * den.exact_div(y[i, j].den)) for i in range(d)]
        polys += [den if i == j else Poly() for i in range(d)]
        e = max(p.degree for p in polys if not p.is_zero())
        columns.append([HomoPoly.from_poly(p, e) for p in polys])
    return HomogeneousCurve.from_columns(d, columns)


def load_curve(path) -> HomogeneousCurve:
    with open(path, encoding="utf-8") as fh:
        return parse_curve(fh.read())


__all__ = [
    "Chart",
    "ChartMap",
    "CurveError",
    "HomogeneousCurve",
    "ParseError",
    "chart_map",
    "curve_from_chart",
    "evaluate_subspace",
    "load_curve",
    "parse_curve",
    "projective_points",
    "saturate",
    "visible_chart",
]

