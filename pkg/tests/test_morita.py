import random

import pytest

from grasscurve.arith import RatFun, RatMatrix
from grasscurve.curve import ChartMap, HomogeneousCurve
from grasscurve.group import GroupElement, Moebius2
from grasscurve.morita import (
    Reason,
    WitnessError,
    analyze,
    check_hypotheses,
    decide_morita,
    morita_curve,
    recover_group_element,
    verify_equivalence,
)
from grasscurve.parsing import parse_form
from grasscurve.randgen import random_group_element
from grasscurve.schwarzian import moebius_apply, reparametrize

x = RatFun.x()
EYE, ZERO = [[1, 0], [0, 1]], [[0, 0], [0, 0]]


def curve(d, *cols):
    return HomogeneousCurve.from_columns(d, [[parse_form(e) for e in col] for col in cols])


UNBALANCED = curve(2, ["s^3", "0", "t^3", "0"], ["0", "s*t^2", "0", "t^3"])
DELTA_ZERO = curve(2, ["s^2", "0", "t^2", "0"], ["s*t", "0", "0", "t^2"])


def test_morita_curve_small_d():
    assert morita_curve(1) == curve(1, ["s", "t"])
    assert morita_curve(2) == curve(2, ["s", "0", "t", "0"], ["0", "s", "0", "t"])
    rep = analyze(morita_curve(3))
    assert (rep.degree, rep.width, rep.delta_nonzero) == (3, 0, True)
    with pytest.raises(ValueError):
        morita_curve(0)


def test_hypothesis_gate():
    assert check_hypotheses(morita_curve(2))[1] is Reason.OK
    assert check_hypotheses(UNBALANCED)[1] is Reason.DEGREE_MISMATCH
    assert check_hypotheses(DELTA_ZERO)[1] is Reason.DELTA_ZERO


def test_report_fields():
    rep = analyze(UNBALANCED)
    assert rep.to_json() == {"degree": 4, "splitting": [1, 3], "width": 2, "delta_nonzero": None}
    rep = analyze(morita_curve(2))
    assert rep.sigma_zero is True
    assert rep.to_json()["chart"] == "bottom"


def test_recover_identity_chart():
    g = recover_group_element(ChartMap.from_matrix(RatMatrix.scalar(2, x)), 0)
    assert g == GroupElement.identity(2)


def test_recover_shear():
    b0 = [[0, 1], [0, 0]]
    y = RatMatrix.scalar(2, x) + RatMatrix.from_scalars(b0)
    assert recover_group_element(ChartMap.from_matrix(y), 0) == GroupElement(EYE, b0, ZERO, EYE)


def test_recover_inversion():
    y = RatMatrix.scalar(2, x.inverse())
    g = recover_group_element(ChartMap.from_matrix(y), 1)
    assert g.is_proportional(GroupElement(ZERO, EYE, EYE, ZERO))


def test_recover_refuses_bad_input():
    with pytest.raises(WitnessError, match="not a matrix"):
        recover_group_element(ChartMap.from_matrix(RatMatrix([[x * x]])), 1)
    with pytest.raises(WitnessError, match="another base point"):
        recover_group_element(ChartMap.from_matrix(RatMatrix([[x.inverse()]])), 0)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_decide_moved_morita(d):
    rng = random.Random(d)
    for _ in range(5):
        g = random_group_element(d, rng)
        c = moebius_apply(g, morita_curve(d))
        v = decide_morita(c)
        assert v.accepted and v.reason is Reason.OK
        assert verify_equivalence(v.witness, c)
        # witnesses agree up to the stabilizer of f_M, which is {diag(A, A)}
        h = g.inverse() @ v.witness
        assert h.B == h.C == tuple((0,) * d for _ in range(d))
        assert h.A == h.D


def test_decide_rejections():
    assert decide_morita(UNBALANCED).reason is Reason.DEGREE_MISMATCH
    v = decide_morita(DELTA_ZERO)
    assert v.reason is Reason.DELTA_ZERO and not v.accepted and v.witness is None


def test_reparametrized_morita_witness():
    mu = Moebius2(2, 3, 1, 5)
    c = reparametrize(mu, morita_curve(2))
    v = decide_morita(c)
    assert v.accepted
    expected = GroupElement([[2, 0], [0, 2]], [[3, 0], [0, 3]], [[1, 0], [0, 1]], [[5, 0], [0, 5]])
    assert v.witness.is_proportional(expected)


def test_permuted_chart_curve():
    c = curve(2, ["s", "t", "0", "0"], ["0", "0", "s", "t"])
    v = decide_morita(c)
    assert v.accepted
    assert verify_equivalence(v.witness, c)


def test_verify_equivalence():
    assert verify_equivalence(GroupElement.identity(2), morita_curve(2))
    assert not verify_equivalence(GroupElement.identity(2), DELTA_ZERO)
    assert not verify_equivalence(GroupElement.identity(2), UNBALANCED)


def test_degree_one_curves_accepted():
    rng = random.Random(40)
    for _ in range(10):
        a, b, c, d = (rng.randint(-4, 4) for _ in range(4))
        if a * d - b * c == 0:
            continue
        line = curve(1, [f"{a}*s + {b}*t", f"{c}*s + {d}*t"])
        v = decide_morita(line)
        assert v.accepted
        assert v.witness.is_proportional(GroupElement([[a]], [[b]], [[c]], [[d]]))


def test_verdict_json_shape():
    doc = decide_morita(morita_curve(2)).to_json()
    assert set(doc) >= {"accepted", "reason", "report", "witness"}
    assert doc["witness"]["A"] == [["1", "0"], ["0", "1"]]
