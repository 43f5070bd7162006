import numpy as np
import pytest

from codemorph import Code
from codemorph.code import is_reduced
from codemorph.properties import (
    CheckResult,
    all_reduced_codes,
    check_bigrading,
    check_canonical_label,
    check_cf_completeness,
    check_completions,
    check_covering,
    check_exact_rank,
    check_galois,
    check_intersection_complete_rank,
    check_morphisms,
    check_factor_solvability,
    check_rank_bounds,
    check_redundancy_lemma,
    check_reduction,
    check_second_galois,
    check_trunk_lemmas,
    random_reduced_code,
    run_all,
)


def test_check_result_bookkeeping():
    res = CheckResult("demo")
    assert not res.ok  # no cases yet
    res.record(True)
    assert res.ok and res.line() == "PASS  demo: 1 cases, 0 violations"
    for k in range(7):
        res.record(False, k)
    assert res.violations == 7 and res.examples == [0, 1, 2, 3, 4]
    assert res.line().startswith("FAIL")


def test_generators():
    rng = np.random.default_rng(0)
    for n in (1, 3, 5):
        C = random_reduced_code(rng, n)
        assert C.n == n and is_reduced(C)
    assert sum(1 for C in all_reduced_codes(2)) == sum(1 for C in all_reduced_codes(2) if is_reduced(C))
    assert Code(1, frozenset({0, 1})) in set(all_reduced_codes(1))


@pytest.mark.parametrize(
    "check",
    [
        lambda: check_trunk_lemmas(100, 5, 1),
        lambda: check_redundancy_lemma(60, 4, 1),
        lambda: check_reduction(60, 5, 1),
        lambda: check_canonical_label(40, 5, 1),
        lambda: check_completions(100, 5, 1),
        lambda: check_cf_completeness(40, 4, 1),
        lambda: check_galois(2, 20, 4, 1),
        lambda: check_factor_solvability(40, 3, 1),
        lambda: check_morphisms(60, 4, 1),
        lambda: check_second_galois(3, 10, 1),
        lambda: check_exact_rank(40, 3, 2, 1),
        lambda: check_rank_bounds(60, 4, 1),
        lambda: check_intersection_complete_rank(30, 4, 1),
    ],
    ids=[
        "trunk-lemmas",
        "redundancy",
        "reduction",
        "labels",
        "completions",
        "cf",
        "galois",
        "factor-solvability",
        "morphisms",
        "trunk-root-connection",
        "exact-rank",
        "rank-bounds",
        "intersection-complete",
    ],
)
def test_quick_suites(check):
    res = check()
    assert res.ok, (res.line(), res.examples)


def test_covering_and_bigrading_small():
    res, steps = check_covering(all_reduced_codes(2), "small")
    assert res.ok and steps
    assert check_bigrading(steps).ok


def test_run_all_quick_is_deterministic():
    a = [r.line() for r in run_all(seed=3, quick=True)]
    b = [r.line() for r in run_all(seed=3, quick=True)]
    assert a == b and all(line.startswith("PASS") for line in a)
