"""Morphisms of codes given by tuples of subsets (equivalently, 0/1 matrices)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .bits import DomainError, as_mask, bits_of, format_word, full_mask, vec_to_mask
from .code import Code, NeuronStatus, as_bitmatrix, is_reduced, neuron_status, reduce, root, trunk
from .galois import GaloisPair, bool_mul, residual


@dataclass(frozen=True)
class MorphismRep:
    """Representative ``(tau_1, ..., tau_r)`` of a morphism out of codes on ``source_n`` neurons.

    A word ``c`` maps to ``{j : tau_j <= c}``.  Row ``j`` of :attr:`matrix` has
    support ``tau_j``.
    """

    source_n: int
    taus: tuple

    def __post_init__(self):
        taus = tuple(as_mask(t) for t in self.taus)
        top = full_mask(self.source_n)
        for t in taus:
            if t & ~top:
                raise DomainError(f"{format_word(t)} is not a subset of [{self.source_n}]")
        object.__setattr__(self, "taus", taus)

    @classmethod
    def from_matrix(cls, T) -> "MorphismRep":
        T = as_bitmatrix(T)
        return cls(T.shape[1], tuple(vec_to_mask(row) for row in T))

    @classmethod
    def identity(cls, n: int) -> "MorphismRep":
        return cls(n, tuple(1 << i for i in range(n)))

    @property
    def r(self) -> int:
        return len(self.taus)

    @property
    def matrix(self) -> np.ndarray:
        T = np.zeros((self.r, self.source_n), dtype=np.uint8)
        for j, t in enumerate(self.taus):
            for i in bits_of(t):
                T[j, i] = 1
        return T

    def evaluate(self, word: int) -> int:
        out = 0
        for j, t in enumerate(self.taus):
            if word & t == t:
                out |= 1 << j
        return out

    def __str__(self):
        return "(" + ", ".join(format_word(t) for t in self.taus) + ")"


class Application(NamedTuple):
    image: Code
    word_map: dict


def _check_source(rep: MorphismRep, C: Code):
    if rep.source_n != C.n:
        raise DomainError(f"representative expects {rep.source_n} neurons, code has {C.n}")


def apply(rep: MorphismRep, C: Code) -> Application:
    """Image code on ``rep.r`` neurons and the codeword-by-codeword map."""
    _check_source(rep, C)
    word_map = {w: rep.evaluate(w) for w in C.words}
    pair = GaloisPair(rep.matrix)
    assert all(pair.upper_mask(w) == v for w, v in word_map.items())
    return Application(Code(rep.r, frozenset(word_map.values())), word_map)


def canonical_representative(C: Code, rep: MorphismRep) -> MorphismRep:
    """Replace each ``tau_j`` by the root of its trunk in ``C``."""
    _check_source(rep, C)
    taus = []
    for j, t in enumerate(rep.taus):
        T = trunk(C, t)
        if not T:
            raise DomainError(
                f"image neuron {j + 1} is trivial (no codeword contains {format_word(t)}); "
                "delete trivial image neurons first"
            )
        taus.append(root(T, C.n))
    return MorphismRep(C.n, tuple(taus))


def drop_trivial_image_neurons(C: Code, rep: MorphismRep) -> MorphismRep:
    """Remove tuple entries whose trunk in ``C`` is empty."""
    _check_source(rep, C)
    return MorphismRep(C.n, tuple(t for t in rep.taus if trunk(C, t)))


def adjoint(C: Code, rep: MorphismRep) -> dict:
    """Canonical adjoint on the image: ``d -> union of canonical tau_j for j in d``."""
    canon = canonical_representative(C, rep)
    pair = GaloisPair(canon.matrix)
    out = {}
    for d in apply(canon, C).image.words:
        u = 0
        for j in bits_of(d):
            u |= canon.taus[j]
        assert u == pair.lower_mask(d)
        out[d] = u
    return out


def is_bmf(C: Code, rep: MorphismRep) -> bool:
    """True iff the canonical adjoint undoes the morphism on every codeword.

    When it does, ``C = (C:T) T`` holds for the canonical matrix ``T``.
    """
    canon = canonical_representative(C, rep)
    word_map = apply(canon, C).word_map
    back = adjoint(C, canon)
    ok = all(back[word_map[w]] == w for w in C.words)
    if ok:
        M = C.matrix()
        T = canon.matrix
        assert np.array_equal(bool_mul(residual(M, T), T), M)
    return ok


def compose(f: MorphismRep, g: MorphismRep, C: Code | None = None) -> MorphismRep:
    """Representative of ``g after f``; its matrix is ``[g][f]`` over the Boolean semiring.

    With ``C`` given, the result is also checked against pointwise composition.
    """
    if g.source_n != f.r:
        raise DomainError(f"cannot compose: g expects {g.source_n} neurons, f produces {f.r}")
    h = MorphismRep.from_matrix(bool_mul(g.matrix, f.matrix))
    if C is not None:
        _check_source(f, C)
        assert all(h.evaluate(w) == g.evaluate(f.evaluate(w)) for w in C.words)
    return h


def bmf_reduce_source(C: Code, rep: MorphismRep) -> MorphismRep:
    """Turn a BMF out of ``C`` into one out of the reduced code, same image up to isomorphism."""
    if not is_bmf(C, rep):
        raise DomainError("representative is not a BMF of this code")
    canon = canonical_representative(C, rep)
    red = reduce(C)
    taus = []
    for t in canon.taus:
        v = 0
        for k, j in enumerate(red.kept):
            if (t >> j) & 1:
                v |= 1 << k
        taus.append(v)
    out = MorphismRep(red.code.n, tuple(taus))
    return canonical_representative(red.code, out)


def bmf_reduce_target(C: Code, rep: MorphismRep) -> MorphismRep:
    """Drop redundant image neurons one at a time (ascending), keeping a BMF.

    A redundant image neuron is only dropped if the shorter tuple is still a
    BMF.  Some BMFs have no BMF onto their reduced image at all (for example
    the first covering map of ``{5, 13, 25, 34, 35, 234, 1245}``); then a
    DomainError is raised once no further neuron can go.
    """
    if not is_reduced(C):
        raise DomainError("source code must be reduced")
    if not is_bmf(C, rep):
        raise DomainError("representative is not a BMF of this code")
    cur = canonical_representative(C, rep)
    while True:
        image = apply(cur, C).image
        redundant = [k for k in range(image.n) if neuron_status(image, k)[0] is NeuronStatus.REDUNDANT]
        if not redundant:
            return cur
        for k in redundant:
            shorter = MorphismRep(C.n, cur.taus[:k] + cur.taus[k + 1:])
            if is_bmf(C, shorter):
                cur = shorter
                break
        else:
            raise DomainError(
                f"no redundant image neuron of {image} can be dropped without losing the factorization"
            )
