"""The Morita curve and the decision procedure for GL(2d)-equivalence to it.

A curve of Plücker degree d with Delta != 0 whose Schwarzian vanishes is a
matrix Möbius map in any chart, y = (Ax+B)(Cx+D)^-1, and [[A, B], [C, D]]
then carries the Morita curve [s*I; t*I] onto it.  The blocks are read off
from y, y', y'' at a single base point x0: with z0 = (y0')^-1 y0'' / 2,

    A = y0' - y0 z0,  B = y0 + y0 z0 x0 - y0' x0,  C = -z0,  D = I + z0 x0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import count

from .arith import HomoPoly, Q, linalg
from .curve import Chart, ChartMap, HomogeneousCurve, visible_chart
from .group import GroupElement
from .oracle import regular_points, subspace_equal_at_samples
from .pluecker import pluecker_vector
from .schwarzian import derivative_generically_invertible, moebius_apply, sigma_matrix
from .splitting import splitting_type

# curves wider than this are outside the recognition criterion
WIDTH_BOUND = 3


class Reason(enum.Enum):
    OK = "OK"
    DEGREE_MISMATCH = "DEGREE_MISMATCH"
    DELTA_ZERO = "DELTA_ZERO"
    WIDTH_EXCEEDED = "WIDTH_EXCEEDED"
    SIGMA_NONZERO = "SIGMA_NONZERO"


class WitnessError(ValueError):
    pass


@dataclass(frozen=True)
class CurveReport:
    degree: int
    splitting: tuple
    width: int
    delta_nonzero: bool | None = None
    sigma_zero: bool | None = None
    chart: str | None = None

    def to_json(self) -> dict:
        out = {
            "degree": self.degree,
            "splitting": list(self.splitting),
            "width": self.width,
            "delta_nonzero": self.delta_nonzero,
        }
        if self.sigma_zero is not None:
            out["sigma_zero"] = self.sigma_zero
        if self.chart is not None:
            out["chart"] = self.chart
        return out


@dataclass(frozen=True)
class MoritaVerdict:
    accepted: bool
    reason: Reason
    report: CurveReport
    witness: GroupElement | None = None
    notes: tuple = field(default=())

    def to_json(self) -> dict:
        out = {
            "accepted": self.accepted,
            "reason": self.reason.value,
            "report": self.report.to_json(),
            "witness": self.witness.to_json() if self.witness is not None else None,
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def morita_curve(d: int) -> HomogeneousCurve:
    """[s*I_d; t*I_d]."""
    if d < 1:
        raise ValueError("d must be at least 1")
    s, t, z = HomoPoly(1, [1, 0]), HomoPoly(1, [0, 1]), HomoPoly.zero(1)
    top = [tuple(s if i == j else z for j in range(d)) for i in range(d)]
    bottom = [tuple(t if i == j else z for j in range(d)) for i in range(d)]
    return HomogeneousCurve(d, (1,) * d, tuple(top + bottom))


def _frame(c: HomogeneousCurve):
    """Chart map of c plus the row permutation P with chart map read off P.c in the bottom chart."""
    cm, perm = visible_chart(c)
    if perm is None and cm.chart is Chart.TOP:
        perm = tuple(range(c.d, 2 * c.d)) + tuple(range(c.d))
    return cm, perm


@dataclass
class _Analysis:
    report: CurveReport
    reason: Reason
    chart: ChartMap | None = None
    perm: tuple | None = None
    sigma: object = None


def _analyze(c: HomogeneousCurve) -> _Analysis:
    degree = pluecker_vector(c).degree
    split = splitting_type(c)
    reason = Reason.OK
    delta = sigma_zero = None
    cm = perm = sig = None
    chart_label = None
    if degree != c.d:
        reason = Reason.DEGREE_MISMATCH
    else:
        cm, perm = _frame(c)
        chart_label = cm.chart.value if perm is None or cm.chart is Chart.TOP else "permuted"
        delta = derivative_generically_invertible(cm)
        if not delta:
            reason = Reason.DELTA_ZERO
        else:
            sig = sigma_matrix(cm.y)
            sigma_zero = sig.is_zero()
            if split.width > WIDTH_BOUND:
                reason = Reason.WIDTH_EXCEEDED
    report = CurveReport(degree, split.exponents, split.width, delta, sigma_zero, chart_label)
    return _Analysis(report, reason, cm, perm, sig)


def analyze(c: HomogeneousCurve) -> CurveReport:
    """Degree, splitting type, width, and (where defined) Delta and sigma."""
    return _analyze(c).report


def check_hypotheses(c: HomogeneousCurve) -> tuple[CurveReport, Reason]:
    """Test deg = d, then Delta != 0, then width <= 3; report the first failure or OK."""
    a = _analyze(c)
    return a.report, a.reason


def base_points():
    """0, 1, -1, 2, -2, ..."""
    yield Q(0)
    for k in count(1):
        yield Q(k)
        yield Q(-k)


def _jets(cm: ChartMap, x0):
    y1 = cm.y.derivative()
    y2 = y1.derivative()
    return cm.y(x0), y1(x0), y2(x0)


def recover_group_element(cm: ChartMap, x0, *, check_sigma: bool = True) -> GroupElement:
    """Blocks of the Möbius map through the jet (y0, y0', y0'') at x0."""
    if check_sigma and not sigma_matrix(cm.y).is_zero():
        raise WitnessError("curve is not a matrix Möbius map")
    x0 = Q(x0)
    if not cm.in_domain(x0):
        raise WitnessError("pick another base point")
    try:
        y0, y1, y2 = _jets(cm, x0)
        y1_inv = linalg.inverse(y1)
    except ZeroDivisionError:
        raise WitnessError("pick another base point") from None
    d = cm.d
    eye = linalg.identity(d)
    z0 = linalg.matscale(linalg.matmul(y1_inv, y2), Q(1, 2))
    y0z0 = linalg.matmul(y0, z0)
    A = linalg.matsub(y1, y0z0)
    B = linalg.matsub(linalg.matadd(y0, linalg.matscale(y0z0, x0)), linalg.matscale(y1, x0))
    C = linalg.matscale(z0, -1)
    D = linalg.matadd(eye, linalg.matscale(z0, x0))
    return GroupElement(A, B, C, D)


def choose_base_point(cm: ChartMap):
    """First of 0, 1, -1, 2, ... in the chart domain with invertible derivative."""
    y1 = cm.y.derivative()
    for x0 in base_points():
        if not cm.in_domain(x0):
            continue
        try:
            if linalg.det(y1(x0)):
                return x0
        except ZeroDivisionError:
            continue


def verify_equivalence(g: GroupElement, c: HomogeneousCurve) -> bool:
    """Does g carry the Morita curve onto c?  Plücker proportionality plus spans at 2*deg+1 points."""
    if g.d != c.d:
        return False
    image = moebius_apply(g, morita_curve(c.d))
    p1, p2 = pluecker_vector(image), pluecker_vector(c)
    if not p1.is_proportional(p2):
        return False
    points = regular_points([image, c], 2 * max(p1.degree, p2.degree) + 1)
    return subspace_equal_at_samples(image, c, points)


def decide_morita(c: HomogeneousCurve) -> MoritaVerdict:
    a = _analyze(c)
    report = a.report
    if a.reason in (Reason.DEGREE_MISMATCH, Reason.DELTA_ZERO):
        return MoritaVerdict(False, a.reason, report)
    if not report.sigma_zero:
        if a.reason is Reason.WIDTH_EXCEEDED:
            return MoritaVerdict(False, Reason.WIDTH_EXCEEDED, report)
        return MoritaVerdict(
            False,
            Reason.SIGMA_NONZERO,
            report,
            notes=("inconsistent: deg = d, Delta != 0, width <= 3 but sigma != 0; please report this curve",),
        )
    x0 = choose_base_point(a.chart)
    g = recover_group_element(a.chart, x0, check_sigma=False)
    if a.perm is not None:
        g = GroupElement.permutation(a.perm).inverse() @ g
    g = g.normalized()
    if not verify_equivalence(g, c):
        raise RuntimeError("recovered witness failed verification")
    notes = [f"base point x0 = {x0}"]
    if a.reason is Reason.WIDTH_EXCEEDED:
        notes.append("width exceeds 3, outside the recognition criterion; accepted because sigma vanishes")
    return MoritaVerdict(True, Reason.OK, report, g, tuple(notes))

