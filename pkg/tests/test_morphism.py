import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codemorph import Code, DomainError
from codemorph.bits import parse_word
from codemorph.code import canonical_key, is_reduced, reduce
from codemorph.covering import covering_map, defect
from codemorph.galois import GaloisPair, bool_mul
from codemorph.morphism import (
    MorphismRep,
    adjoint,
    apply,
    bmf_reduce_source,
    bmf_reduce_target,
    canonical_representative,
    compose,
    drop_trivial_image_neurons,
    is_bmf,
)
from codemorph.properties import bmf_onto


def rep(n, *taus):
    return MorphismRep(n, tuple(parse_word(t) for t in taus))


@st.composite
def code_and_rep(draw, max_n=5, max_r=4):
    n = draw(st.integers(1, max_n))
    C = Code(n, frozenset(draw(st.sets(st.integers(0, (1 << n) - 1), min_size=1))))
    taus = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=1, max_size=max_r))
    f = drop_trivial_image_neurons(C, MorphismRep(n, tuple(taus)))
    return C, f


def test_str_format():
    assert str(rep(4, "12", "23", "34")) == "(12, 23, 34)"


def test_apply_examples(example1, V):
    image = apply(rep(4, "12", "23", "34"), example1).image
    assert image == Code.from_matrix(V)
    assert apply(MorphismRep.identity(4), example1).image == example1
    assert apply(rep(4, "1", "23", "34"), example1).word_map == apply(rep(4, "12", "23", "34"), example1).word_map


def test_apply_width_mismatch(example1):
    with pytest.raises(DomainError):
        apply(rep(3, "1"), example1)


def test_canonical_representative_examples(example1):
    assert canonical_representative(example1, rep(4, "1", "23", "34")) == rep(4, "12", "23", "34")
    f = rep(4, "12", "23", "34")
    assert canonical_representative(example1, f) == f
    assert canonical_representative(example1, rep(4, "2")) == rep(4, "2")


def test_trivial_image_neuron_rejected():
    C = Code.from_strings(["", "1", "2"], 2)
    f = rep(2, "1", "12")
    with pytest.raises(DomainError, match="image neuron 2"):
        canonical_representative(C, f)
    assert drop_trivial_image_neurons(C, f) == rep(2, "1")


def test_adjoint_examples(example1):
    back = adjoint(example1, rep(4, "12", "23", "34"))
    assert back[0b011] == parse_word("123")
    assert back[0] == 0
    assert back[0b100] == parse_word("34")


def test_is_bmf_examples(example1):
    assert is_bmf(example1, rep(4, "12", "23", "34"))
    assert is_bmf(example1, MorphismRep.identity(4))
    assert not is_bmf(example1, rep(4, "1234"))


def test_compose_identity(example1):
    f = rep(4, "12", "23", "34")
    assert compose(f, MorphismRep.identity(3), example1) == f
    assert compose(MorphismRep.identity(4), f, example1) == f
    with pytest.raises(DomainError):
        compose(f, MorphismRep.identity(2))


@settings(max_examples=200, deadline=None)
@given(code_and_rep(), st.data())
def test_compose_is_pointwise(cf, data):
    C, f = cf
    if f.r == 0:
        return
    g_taus = data.draw(st.lists(st.integers(0, (1 << f.r) - 1), min_size=1, max_size=3))
    g = MorphismRep(f.r, tuple(g_taus))
    h = compose(f, g, C)
    for w in C.words:
        assert h.evaluate(w) == g.evaluate(f.evaluate(w))


@settings(max_examples=200, deadline=None)
@given(code_and_rep())
def test_apply_agrees_with_galois_upper(cf):
    C, f = cf
    pair = GaloisPair(f.matrix)
    for w, d in apply(f, C).word_map.items():
        assert pair.upper_mask(w) == d


@settings(max_examples=200, deadline=None)
@given(code_and_rep())
def test_canonical_rep_same_map_and_maximal(cf):
    C, f = cf
    if f.r == 0:
        return
    canon = canonical_representative(C, f)
    assert apply(canon, C).word_map == apply(f, C).word_map
    assert canonical_representative(C, canon) == canon
    for t, c in zip(f.taus, canon.taus):
        assert t & c == t


@settings(max_examples=200, deadline=None)
@given(code_and_rep())
def test_bmf_is_bijective(cf):
    C, f = cf
    if f.r and is_bmf(C, f):
        assert len(apply(f, C).image) == len(C)


def test_reduction_composed_with_inclusion(small_pair):
    Cp = Code.from_matrix(small_pair[1])
    red = reduce(Cp)
    rho = MorphismRep(Cp.n, tuple(1 << j for j in red.kept))
    assert apply(rho, Cp).image == red.code
    incl = MorphismRep.identity(red.code.n)
    assert compose(rho, incl, Cp) == rho


def test_bmf_reduce_source(small_pair):
    Cp = Code.from_matrix(small_pair[1])
    f = MorphismRep.identity(3)
    assert is_bmf(Cp, f)
    g = bmf_reduce_source(Cp, f)
    C = reduce(Cp).code
    assert g.source_n == 2 and g.r == 3
    assert is_bmf(C, g)
    assert canonical_key(apply(g, C).image) == canonical_key(apply(f, Cp).image)


def test_bmf_reduce_source_on_reduced_code_is_unchanged(example1):
    f = rep(4, "12", "23", "34")
    assert bmf_reduce_source(example1, f) == f


def test_bmf_reduce_source_rejects_non_bmf(example1):
    with pytest.raises(DomainError):
        bmf_reduce_source(example1, rep(4, "1234"))


def test_bmf_reduce_target_drops_duplicate(example1):
    f = rep(4, "12", "23", "34", "23")
    g = bmf_reduce_target(example1, f)
    assert g.r == 3 and set(g.taus) == set(rep(4, "12", "23", "34").taus)
    assert bmf_reduce_target(example1, g) == g


def test_bmf_reduce_target_matches_covering_image(example1):
    step = covering_map(example1, 1)
    raw = drop_trivial_image_neurons(example1, step.raw_rep)
    g = bmf_reduce_target(example1, raw)
    assert canonical_key(apply(g, example1).image) == canonical_key(step.image)


def test_reduced_image_need_not_be_a_factor():
    C = Code.from_strings("5 13 25 34 35 234 1245".split(), 5)
    step = covering_map(C, 0)
    assert is_reduced(C) and step.is_bmf_step and not step.reduced_bmf
    assert bmf_onto(C, step.image) is None
    raw = drop_trivial_image_neurons(C, step.raw_rep)
    with pytest.raises(DomainError):
        bmf_reduce_target(C, raw)


def test_bmf_lowers_defect(example1):
    f = rep(4, "12", "23", "34")
    image = apply(f, example1).image
    assert is_bmf(example1, f)
    assert defect(image) < defect(example1)
    assert np.array_equal(bool_mul(apply(f, example1).image.matrix(), f.matrix).shape, (7, 4))
