"""The matrix-valued Schwarzian derivative and the two group actions.

For a chart map y(x) with invertible derivative, w = (y')^-1 y'' and the
Schwarzian coefficient is w' - w^2 / 2.  Under y -> (Ay+B)(Cy+D)^-1 it is
conjugated by Cy+D; under x -> (alpha x + beta)/(gamma x + delta) it picks up
the square of the derivative of the substitution.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import HomoPoly, Poly, RatFun, RatMatrix, SingularMatrixError
from .curve import Chart, ChartMap, HomogeneousCurve, visible_chart
from .group import GroupElement, Moebius2
from .pluecker import pluecker_degree


class SchwarzianUndefined(ArithmeticError):
    pass


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class SchwarzianTensor:
    """sigma = coefficient(x) dx^2 in the given chart."""

    coefficient: RatMatrix
    chart: Chart = Chart.BOTTOM

    def is_zero(self) -> bool:
        return self.coefficient.is_zero()


def log_derivative(y: RatMatrix) -> RatMatrix:
    """(y')^-1 y''."""
    y1 = y.derivative()
    try:
        inv = y1.inverse()
    except SingularMatrixError:
        raise SchwarzianUndefined("derivative identically singular; sigma undefined") from None
    return inv @ y1.derivative()


def sigma_matrix(y: RatMatrix) -> RatMatrix:
    w = log_derivative(y)
    return w.derivative() - (w @ w).scale(RatFun.constant(1) / 2)


def sigma(cm: ChartMap) -> SchwarzianTensor:
    return SchwarzianTensor(sigma_matrix(cm.y), cm.chart)


def _chart_for_invariants(c: HomogeneousCurve) -> ChartMap:
    cm, _ = visible_chart(c)
    return cm


def delta_nonzero(c: HomogeneousCurve) -> bool:
    """Delta(f) != 0, for curves of Plücker degree d.

    With deg(f) = d, Delta is a section of a trivial line bundle, so it is
    either identically zero or nowhere zero; it is nonzero iff det(y') is not
    the zero rational function in a chart meeting the curve.
    """
    if pluecker_degree(c) != c.d:
        raise PreconditionError("Delta criterion requires deg(f) = d")
    return derivative_generically_invertible(_chart_for_invariants(c))


def derivative_generically_invertible(cm: ChartMap) -> bool:
    return not cm.y.derivative().det().is_zero()


def sigma_is_zero(c: HomogeneousCurve) -> bool:
    if pluecker_degree(c) != c.d or not delta_nonzero(c):
        raise PreconditionError("sigma as a global tensor requires deg(f) = d and Delta(f) != 0")
    return sigma(_chart_for_invariants(c)).is_zero()


# -- group actions -------------------------------------------------------------


def moebius_apply(g: GroupElement, c: HomogeneousCurve) -> HomogeneousCurve:
    """The curve whose stacked matrix is g times that of c."""
    if g.d != c.d:
        raise ValueError("group element and curve have different d")
    m = g.matrix
    n = 2 * c.d
    rows = []
    for i in range(n):
        row = []
        for j in range(c.d):
            acc = HomoPoly.zero(c.column_degrees[j])
            for k in range(n):
                if m[i][k] and not c.matrix[k][j].is_zero():
                    acc = acc + c.matrix[k][j] * m[i][k]
            row.append(acc)
        rows.append(tuple(row))
    return HomogeneousCurve(c.d, c.column_degrees, tuple(rows))


def act_on_chart(g: GroupElement, y: RatMatrix) -> RatMatrix:
    """(A y + B)(C y + D)^-1."""
    A, B, C, D = (RatMatrix.from_scalars(b) for b in (g.A, g.B, g.C, g.D))
    return (A @ y + B) @ (C @ y + D).inverse()


def reparametrize(mu: Moebius2, c: HomogeneousCurve) -> HomogeneousCurve:
    """Substitute (s, t) -> (alpha s + beta t, gamma s + delta t) in every entry."""
    coeffs = mu.coefficients
    rows = tuple(tuple(f.substitute(*coeffs) for f in row) for row in c.matrix)
    return HomogeneousCurve(c.d, c.column_degrees, rows)


def compose_chart(y: RatMatrix, mu: Moebius2) -> RatMatrix:
    """x -> y(mu(x))."""
    return y.map(lambda f: f.compose_moebius(*mu.coefficients))


def moebius_derivative(mu: Moebius2) -> RatFun:
    """d/dx of (alpha x + beta)/(gamma x + delta)."""
    den = Poly([mu.delta, mu.gamma])
    return RatFun(Poly([mu.det]), den * den)


def transformation_check(g: GroupElement, cm: ChartMap) -> bool:
    """sigma(g.y) == (Cy+D) sigma(y) (Cy+D)^-1, exactly."""
    y = cm.y
    lhs = sigma_matrix(act_on_chart(g, y))
    C, D = RatMatrix.from_scalars(g.C), RatMatrix.from_scalars(g.D)
    conj = C @ y + D
    rhs = conj @ sigma_matrix(y) @ conj.inverse()
    return lhs == rhs


def reparametrization_check(mu: Moebius2, cm: ChartMap) -> bool:
    """sigma(y o mu)(x) == mu'(x)^2 sigma(y)(mu(x)), exactly."""
    lhs = sigma_matrix(compose_chart(cm.y, mu))
    dmu = moebius_derivative(mu)
    rhs = compose_chart(sigma_matrix(cm.y), mu).scale(dmu * dmu)
    return lhs == rhs


__all__ = [
    "PreconditionError",
    "SchwarzianTensor",
    "SchwarzianUndefined",
    "act_on_chart",
    "compose_chart",
    "delta_nonzero",
    "moebius_apply",
    "reparametrization_check",
    "reparametrize",
    "sigma",
    "sigma_is_zero",
    "sigma_matrix",
    "transformation_check",
]
