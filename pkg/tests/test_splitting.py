import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grasscurve.arith import HomoPoly
from grasscurve.curve import HomogeneousCurve
from grasscurve.morita import morita_curve
from grasscurve.oracle import h0_profile, regular_points, splitting_from_h0, subspace_equal_at_samples
from grasscurve.parsing import parse_form
from grasscurve.pluecker import pluecker_degree
from grasscurve.randgen import random_curve, random_form, random_split_curve
from grasscurve.splitting import SplittingType, minimal_basis, splitting_type, width


def curve(d, *cols):
    return HomogeneousCurve.from_columns(d, [[parse_form(e) for e in col] for col in cols])


UNBALANCED = curve(2, ["s^3", "0", "t^3", "0"], ["0", "s*t^2", "0", "t^3"])


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_morita_is_balanced(d):
    sat, split = minimal_basis(morita_curve(d))
    assert split.exponents == (1,) * d
    assert split.width == 0


def test_unbalanced_example():
    sat, split = minimal_basis(UNBALANCED)
    assert split.exponents == (1, 3)
    assert width(UNBALANCED) == 2
    assert subspace_equal_at_samples(sat, UNBALANCED, regular_points([sat, UNBALANCED], 9))


def test_rank_one():
    assert splitting_type(curve(1, ["s^2", "t^2"])).exponents == (2,)
    assert splitting_type(curve(1, ["s*t", "t^2"])).exponents == (1,)


def test_constant_column_has_exponent_zero():
    c = curve(2, ["1", "0", "0", "0"], ["0", "s", "0", "t"])
    assert splitting_type(c).exponents == (0, 1)


def test_from_exponents_sorts():
    st_ = SplittingType.from_exponents([3, 1, 2])
    assert st_.exponents == (1, 2, 3)
    assert st_.width == 2
    assert st_.degree == 6


@pytest.mark.parametrize("exps", [(0, 2), (1, 4), (2, 2, 5), (0, 1, 3), (1, 1, 2, 4), (0, 0, 3)])
def test_prescribed_splitting_recovered(exps):
    rng = random.Random(str(exps))
    for _ in range(3):
        c = random_split_curve(list(exps), rng)
        assert splitting_type(c).exponents == exps


def test_width_at_most_degree_bound_for_small_d():
    # width <= d whenever deg = d; check on degree-d curves from the random corpus
    rng = random.Random(4)
    for _ in range(30):
        d = rng.randint(1, 3)
        c = random_curve(d, rng, max_degree=2)
        split = splitting_type(c)
        assert sum(split.exponents) == pluecker_degree(c)
        if pluecker_degree(c) == d:
            assert split.width <= d


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32))
def test_agrees_with_h0_oracle(seed):
    rng = random.Random(seed)
    d = rng.randint(1, 3)
    c = random_curve(d, rng, max_degree=4)
    assert splitting_type(c) == splitting_from_h0(h0_profile(c))


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32))
def test_common_factor_is_saturated_away(seed):
    rng = random.Random(seed)
    c = random_curve(2, rng, max_degree=3)
    factor = random_form(1, rng)
    if factor.is_zero():
        return
    cols = c.columns()
    cols[0] = [f * factor for f in cols[0]]
    bumped = HomogeneousCurve.from_columns(2, cols)
    assert splitting_type(bumped) == splitting_type(c)
    assert pluecker_degree(bumped) == pluecker_degree(c)


def test_saturated_basis_has_splitting_degrees():
    sat, split = minimal_basis(UNBALANCED)
    assert tuple(sorted(sat.column_degrees)) == split.exponents
    assert isinstance(sat.matrix[0][0], HomoPoly)
