import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codemorph import Code, DomainError
from codemorph.code import closure_intersection, closure_union, is_intersection_complete, is_union_complete
from codemorph.ideal import (
    ONE,
    CanonicalForm,
    Pseudomonomial,
    all_pseudomonomials,
    canonical_form,
    cf_census,
    code_of_cf,
    intersection_completion_cf,
    is_canonical,
    separator,
    union_completion_cf,
    vanishes,
)
from codemorph.textio import parse_pseudomonomial


def pm(text):
    return parse_pseudomonomial(text)


def elems(*texts):
    return {pm(t) for t in texts}


@st.composite
def codes(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    ws = draw(st.sets(st.integers(0, (1 << n) - 1), min_size=1))
    return Code(n, frozenset(ws))


EXAMPLE1_CF = ("x4*(1-x3)", "x1*(1-x2)", "x2*(1-x1)*(1-x3)", "x3*(1-x2)*(1-x4)")


def test_pseudomonomial_rejects_overlap():
    with pytest.raises(DomainError):
        Pseudomonomial(0b1, 0b1)


def test_printing():
    assert str(pm("(1-x3)*x2*(1-x1)")) == "x2*(1-x1)*(1-x3)"
    assert str(ONE) == "1"


def test_vanishes_examples(example1):
    assert vanishes(pm("x1*(1-x2)"), example1)
    assert vanishes(pm("x2*(1-x1)*(1-x3)"), example1)
    assert not vanishes(pm("x1"), Code.from_strings(["1"], 1))
    with pytest.raises(DomainError):
        vanishes(pm("x5"), example1)


def test_canonical_form_example(example1):
    t0 = time.perf_counter()
    cf = canonical_form(example1)
    assert set(cf) == elems(*EXAMPLE1_CF)
    assert time.perf_counter() - t0 < 1.0


def test_canonical_form_order_is_deterministic(example1):
    assert [str(p) for p in canonical_form(example1)] == [
        "x1*(1-x2)",
        "x4*(1-x3)",
        "x2*(1-x1)*(1-x3)",
        "x3*(1-x2)*(1-x4)",
    ]


def test_canonical_form_trivial_cases():
    assert len(canonical_form(Code.cube(3))) == 0
    assert set(canonical_form(Code.from_strings([""], 2))) == elems("x1", "x2")
    assert tuple(canonical_form(Code(2, frozenset()))) == (ONE,)


def test_separator_examples():
    assert separator(pm("x1*(1-x2)"), pm("x2*x3")) == 0b10
    p = pm("x1*(1-x2)")
    assert separator(p, p) == 0
    assert separator(p, pm("x2*(1-x1)")) == 0b11


def test_is_canonical_examples(example1):
    assert is_canonical(canonical_form(example1))[0]
    ok, pair = is_canonical(elems("x1", "x1*x2"))
    assert not ok and set(pair) == elems("x1", "x1*x2")
    assert not is_canonical(elems("x1*(1-x2)", "x2*(1-x3)"))[0]
    assert is_canonical(elems("x1*(1-x2)", "x2*(1-x3)", "x1*(1-x3)"))[0]
    with pytest.raises(DomainError):
        is_canonical(["x1"])


def test_completions_of_example(example1):
    cf = canonical_form(example1)
    assert set(intersection_completion_cf(cf)) == elems("x4*(1-x3)", "x1*(1-x2)")
    assert set(union_completion_cf(cf)) == set(cf)
    empty = CanonicalForm((), 3)
    assert len(intersection_completion_cf(empty)) == 0 and len(union_completion_cf(empty)) == 0


def test_completion_rejects_non_canonical():
    bad = CanonicalForm(tuple(elems("x1", "x1*x2")), 2)
    with pytest.raises(DomainError):
        intersection_completion_cf(bad)
    with pytest.raises(DomainError):
        union_completion_cf(bad)


def test_code_of_cf_examples():
    assert code_of_cf([], 3) == Code.cube(3)
    assert code_of_cf([pm("x1")], 2) == Code.from_strings(["", "2"], 2)


def test_all_pseudomonomials_count():
    ps = all_pseudomonomials(4)
    assert len(ps) == 81 == len(set(ps))


@settings(max_examples=120, deadline=None)
@given(codes())
def test_round_trip_and_minimality(C):
    cf = canonical_form(C)
    assert code_of_cf(cf, C.n) == C
    assert is_canonical(cf)[0]
    for p in all_pseudomonomials(C.n):
        if vanishes(p, C):
            assert any(q.divides(p) for q in cf)


@settings(max_examples=120, deadline=None)
@given(codes())
def test_completions_match_closures(C):
    cf = canonical_form(C)
    assert code_of_cf(intersection_completion_cf(cf), C.n) == closure_intersection(C)
    assert code_of_cf(union_completion_cf(cf), C.n) == closure_union(C)
    assert is_intersection_complete(C) == all(bin(p.tau).count("1") <= 1 for p in cf)
    assert is_union_complete(C) == all(bin(p.sigma).count("1") <= 1 for p in cf)


def test_cf_census_small():
    res = cf_census(2)
    assert res["codes"] == 15 and sum(res["histogram"].values()) == 15
    assert res["max_size"] == 2
    assert len(canonical_form(res["witness"])) == 2
