"""Seeded law suites for the Schwarzian and the group actions.

Each trial draws its instance from its own generator, seeded by
``f"{seed}:{suite}:{trial}"``, and every instance serializes to JSON so a
failure can be replayed on its own.
"""

from __future__ import annotations

import random

from .arith import RatMatrix
from .curve import ChartMap, curve_from_chart
from .group import GroupElement, Moebius2
from .oracle import classical_schwarzian, regular_points, subspace_equal_at_samples
from .parsing import parse_ratfun
from .pluecker import pluecker_degree
from .randgen import random_group_element, random_moebius2, random_poly_chart, random_ratfun
from .schwarzian import moebius_apply, reparametrization_check, sigma_matrix, transformation_check
from .splitting import splitting_type

SUITES = ("transformation", "reparametrization", "cocycle", "d1_reduction")


def _matrix_json(y: RatMatrix) -> list:
    return y.to_strings()


def _matrix_from_json(rows) -> RatMatrix:
    return RatMatrix([[parse_ratfun(e) for e in row] for row in rows])


def make_instance(suite: str, d: int, seed, trial: int) -> dict:
    rng = random.Random(f"{seed}:{suite}:{trial}")
    inst = {"suite": suite, "d": d, "seed": seed, "trial": trial}
    if suite == "transformation":
        inst["g"] = random_group_element(d, rng).to_json()
        inst["y"] = _matrix_json(random_poly_chart(d, rng))
    elif suite == "reparametrization":
        inst["mu"] = random_moebius2(rng).to_json()
        inst["y"] = _matrix_json(random_poly_chart(d, rng))
    elif suite == "cocycle":
        inst["g1"] = random_group_element(d, rng).to_json()
        inst["g2"] = random_group_element(d, rng).to_json()
        inst["y"] = _matrix_json(random_poly_chart(d, rng))
    elif suite == "d1_reduction":
        inst["d"] = 1
        inst["f"] = str(random_ratfun(rng))
    else:
        raise ValueError(f"unknown suite {suite!r}")
    return inst


def _cocycle(g1: GroupElement, g2: GroupElement, y: RatMatrix) -> bool:
    c = curve_from_chart(y)
    once = moebius_apply(g1 @ g2, c)
    twice = moebius_apply(g1, moebius_apply(g2, c))
    if splitting_type(once) != splitting_type(twice):
        return False
    deg = max(pluecker_degree(once), pluecker_degree(twice))
    return subspace_equal_at_samples(once, twice, regular_points([once, twice], 2 * deg + 1))


def run_instance(inst: dict) -> bool:
    suite = inst["suite"]
    if suite == "transformation":
        return transformation_check(GroupElement.from_json(inst["g"]), ChartMap.from_matrix(_matrix_from_json(inst["y"])))
    if suite == "reparametrization":
        return reparametrization_check(Moebius2(*inst["mu"]), ChartMap.from_matrix(_matrix_from_json(inst["y"])))
    if suite == "cocycle":
        return _cocycle(GroupElement.from_json(inst["g1"]), GroupElement.from_json(inst["g2"]),
                        _matrix_from_json(inst["y"]))
    if suite == "d1_reduction":
        f = parse_ratfun(inst["f"])
        return sigma_matrix(RatMatrix([[f]]))[0, 0] == classical_schwarzian(f)
    raise ValueError(f"unknown suite {suite!r}")


def run_laws(d: int, trials: int, seed) -> dict:
    if d < 1 or trials < 1:
        raise ValueError("need d >= 1 and trials >= 1")
    suites = [s for s in SUITES if s != "d1_reduction" or d == 1]
    summary = {"d": d, "trials": trials, "seed": seed, "suites": {}, "failures": []}
    for suite in suites:
        passed = 0
        for trial in range(trials):
            inst = make_instance(suite, d, seed, trial)
            try:
                ok = run_instance(inst)
            except Exception as exc:  # a crash is a failed law, not a runner error
                ok = False
                inst = dict(inst, error=f"{type(exc).__name__}: {exc}")
            if ok:
                passed += 1
            else:
                summary["failures"].append(inst)
        summary["suites"][suite] = {"passed": passed, "failed": trials - passed}
    summary["all_passed"] = not summary["failures"]
    return summary
