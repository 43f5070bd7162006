"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (shown even without
``-s``).  The file also runs standalone: ``python tests/test_acceptance.py``.
"""

import functools
import sys
import time

import numpy as np
import pytest

from codemorph import Code, canonical_form
from codemorph.covering import covering_map
from codemorph.ideal import Pseudomonomial
from codemorph.morphism import drop_trivial_image_neurons, is_bmf
from codemorph.poset import downset, enumerate_reduced_codes
from codemorph.properties import (
    DEFAULT_SEED,
    CheckResult,
    all_reduced_codes,
    check_bigrading,
    check_completions,
    check_covering,
    check_exact_rank,
    check_galois,
    check_intersection_complete_rank,
    check_rank_bounds,
    check_redundancy_lemma,
    check_trunk_lemmas,
    random_reduced_code,
)
from codemorph.rank import brank_exact

EXAMPLE1 = ["", "12", "23", "34", "123", "234", "1234"]


def report(number: int, title: str, ok: bool, detail: str, seconds: float, limit: float | None = None):
    timing = f"{seconds:.2f}s" + (f" (limit {limit:g}s)" if limit else "")
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title}: {detail}; {timing}"
    if _capture is not None:
        with _capture.disabled():
            print("\n" + line)
    else:
        print(line)
    return ok


_capture = None


@pytest.fixture(autouse=True)
def _printer(capsys):
    global _capture
    _capture = capsys
    yield
    _capture = None


def timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


def within(seconds: float, limit: float | None) -> bool:
    return limit is None or seconds < limit


def suite(number: int, title: str, fn, limit: float | None = None) -> bool:
    res, dt = timed(fn)
    ok = res.ok and within(dt, limit)
    detail = f"{res.cases} cases, {res.violations} violations"
    if res.examples:
        detail += f", e.g. {res.examples[0]}"
    return report(number, title, ok, detail, dt, limit)


# -- shared inputs ---------------------------------------------------------


@functools.lru_cache(maxsize=None)
def covering_runs():
    rng = np.random.default_rng(DEFAULT_SEED)
    sampled = [random_reduced_code(rng, int(rng.integers(4, 6))) for _ in range(500)]
    small, steps_small = check_covering(all_reduced_codes(3), "all reduced codes, n <= 3")
    big, steps_big = check_covering(sampled, "500 sampled reduced codes, n = 4..5")
    return small, big, steps_small + steps_big


@functools.lru_cache(maxsize=None)
def poset_lambda3():
    return timed(lambda: downset(enumerate_reduced_codes(3)))


# -- criteria --------------------------------------------------------------


def criterion_1() -> bool:
    expected = {
        Pseudomonomial(0b1000, 0b0100),  # x4(1-x3)
        Pseudomonomial(0b0001, 0b0010),  # x1(1-x2)
        Pseudomonomial(0b0010, 0b0101),  # x2(1-x1)(1-x3)
        Pseudomonomial(0b0100, 0b1010),  # x3(1-x2)(1-x4)
    }
    G, dt = timed(lambda: canonical_form(Code.from_strings(EXAMPLE1, 4)))
    got = G.as_set()
    ok = got == expected and within(dt, 1.0)
    return report(1, "canonical form golden", ok, ", ".join(str(p) for p in G), dt, 1.0)


def criterion_2() -> bool:
    return suite(2, "completions via CF vs closure", lambda: check_completions(1000, 6), 60.0)


def criterion_3() -> bool:
    return suite(3, "galois laws", lambda: check_galois(4, 200, 6), 60.0)


def criterion_4() -> bool:
    (small, big, _), dt = timed(covering_runs)
    ok = small.ok and big.ok
    detail = f"{small.cases + big.cases} cases, {small.violations + big.violations} violations"
    return report(4, "covering map BMF iff free", ok, detail, dt)


def criterion_5() -> bool:
    _, _, steps = covering_runs()
    (G, _), _ = timed(poset_lambda3)
    t0 = time.perf_counter()
    res = check_bigrading(steps, "covering steps")
    for e in G.edges:
        p, c = G.nodes[e.parent], G.nodes[e.child]
        res.record(p.t - c.t == 1 and p.d - c.d in (0, 1), ("poset edge", e))
    dt = time.perf_counter() - t0
    detail = f"{res.cases} edges ({len(steps)} covering steps, {len(G.edges)} poset edges), {res.violations} violations"
    return report(5, "bigrading", res.ok, detail, dt)


def criterion_6() -> bool:
    t0 = time.perf_counter()
    C = np.array([[0, 0], [1, 0], [0, 1], [1, 1]], dtype=np.uint8)
    Cp = np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 1]], dtype=np.uint8)
    golden = (brank_exact(C)[0], brank_exact(Cp)[0])
    full = check_intersection_complete_rank(100, 5)
    bounds = check_rank_bounds(500, 5)
    dt = time.perf_counter() - t0
    ok = golden == (2, 3) and full.ok and bounds.ok and within(dt, 300.0)
    detail = (
        f"brank {golden[0]} vs {golden[1]}; intersection-complete {full.cases} codes, {full.violations} violations; "
        f"mrank <= brank on {bounds.cases // 3} codes, {bounds.violations} violations"
    )
    return report(6, "boolean rank", ok, detail, dt, 300.0)


def criterion_7() -> bool:
    return suite(7, "exact solver vs exhaustive search", lambda: check_exact_rank(300, 4, 3))


def criterion_8() -> bool:
    G, dt = poset_lambda3()
    t0 = time.perf_counter()
    n_nodes = len(G.nodes)
    n_four = sum(v.lam == 4 for v in G.nodes.values())
    res = CheckResult("bmf edges")
    for e in G.edges:
        C = G.nodes[e.parent].code
        step = covering_map(C, e.neuron)
        res.record(e.bmf == is_bmf(C, drop_trivial_image_neurons(C, step.raw_rep)), e)
    dt += time.perf_counter() - t0
    ok = n_nodes == 82 and n_four == 24 and res.ok and within(dt, 600.0)
    detail = f"{n_nodes} classes, {n_four} with lambda = 4, {sum(e.bmf for e in G.edges)}/{len(G.edges)} BMF edges re-verified"
    return report(8, "poset down-set from lambda = 3", ok, detail, dt, 600.0)


def criterion_9() -> bool:
    return suite(9, "trunk lemma suite", lambda: check_trunk_lemmas(1000, 6))


def criterion_10() -> bool:
    return suite(10, "redundancy lemma vs brute force", lambda: check_redundancy_lemma(500, 5))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def test_criterion_01_canonical_form_golden():
    assert criterion_1()


def test_criterion_02_completions():
    assert criterion_2()


def test_criterion_03_galois_laws():
    assert criterion_3()


def test_criterion_04_covering_bmf_iff_free():
    assert criterion_4()


def test_criterion_05_bigrading():
    assert criterion_5()


def test_criterion_06_boolean_rank():
    assert criterion_6()


def test_criterion_07_exact_solver():
    assert criterion_7()


def test_criterion_08_poset():
    assert criterion_8()


def test_criterion_09_trunk_lemmas():
    assert criterion_9()


def test_criterion_10_redundancy_lemma():
    assert criterion_10()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria passed")
    sys.exit(0 if all(results) else 1)
