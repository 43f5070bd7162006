"""Covering maps of reduced codes, free neurons, defect and collisions."""

from __future__ import annotations

from dataclasses import dataclass

from .bits import DomainError
from .code import Code, is_reduced, reduce, relative_root, trunk, trunk_count
from .morphism import MorphismRep, apply, drop_trivial_image_neurons, is_bmf


def defect(C: Code) -> int:
    """``t(C) - |C|``; zero exactly for intersection-complete codes."""
    return trunk_count(C) - len(C)


def _require_reduced(C: Code):
    if not is_reduced(C):
        raise DomainError("code must be reduced (no trivial or redundant neurons)")


@dataclass(frozen=True)
class CoveringStep:
    """One covering map ``C -> C^(i)`` with everything the poset needs about it.

    ``raw_image`` lives on ``2n`` virtual neurons (neuron ``j + n`` records
    ``{i, j}``); ``image`` is its reduction and ``rep`` maps ``source`` onto
    ``image`` directly.

    ``is_bmf_step`` is about the covering map itself (``raw_rep`` minus its
    trivial columns).  ``reduced_bmf`` says whether ``rep`` is also a BMF;
    it can be false for a free neuron, because the deleted redundant
    columns may be the only ones that rebuild some codeword.
    """

    source: Code
    neuron: int
    raw_image: Code
    raw_columns: tuple
    raw_rep: MorphismRep
    image: Code
    kept: tuple
    rep: MorphismRep
    is_bmf_step: bool
    reduced_bmf: bool
    t_source: int
    t_image: int
    defect_drop: int

    @property
    def injective(self) -> bool:
        return len(self.image) == len(self.source)


def covering_map(C: Code, i: int) -> CoveringStep:
    _require_reduced(C)
    n = C.n
    if not 0 <= i < n:
        raise DomainError(f"neuron {i} out of range for a code on {n} neurons")
    bit = 1 << i
    ti = trunk(C, bit)
    # neuron j+n fires on c iff {i, j} <= c and that pair's trunk is strictly smaller
    pair_cols = [j for j in range(n) if trunk(C, bit | (1 << j)) != ti]
    raw_words = set()
    for c in C.words:
        v = c & ~bit
        if c & bit:
            for j in pair_cols:
                if (c >> j) & 1:
                    v |= 1 << (j + n)
        raw_words.add(v)
    raw_image = Code(2 * n, frozenset(raw_words))

    # representatives of the nonempty trunks defining each virtual neuron
    tau_of = {j: relative_root(C, 1 << j) for j in range(n) if j != i}
    tau_of.update({j + n: relative_root(C, bit | (1 << j)) for j in pair_cols})
    raw_columns = tuple(sorted(tau_of))
    raw_rep = MorphismRep(n, tuple(tau_of[j] for j in raw_columns))

    red = reduce(raw_image)
    rep = MorphismRep(n, tuple(tau_of[j] for j in red.kept))
    assert apply(rep, C).image == red.code

    t_source = trunk_count(C)
    t_image = trunk_count(red.code)
    return CoveringStep(
        source=C,
        neuron=i,
        raw_image=raw_image,
        raw_columns=raw_columns,
        raw_rep=raw_rep,
        image=red.code,
        kept=tuple(red.kept),
        rep=rep,
        is_bmf_step=is_bmf(C, drop_trivial_image_neurons(C, raw_rep)),
        reduced_bmf=is_bmf(C, rep),
        t_source=t_source,
        t_image=t_image,
        defect_drop=(t_source - len(C)) - (t_image - len(red.code)),
    )


def free_neurons(C: Code) -> list[int]:
    """Neurons whose trunk root is not a codeword, in increasing order."""
    _require_reduced(C)
    return [i for i in range(C.n) if relative_root(C, 1 << i) not in C.words]


def collision_check(C: Code, i: int):
    """The unique pair of codewords merged by the ``i``-th covering map, or ``None``.

    Only ``(root_i - {i}, root_i)`` can collide, where ``root_i`` is the root
    of ``i``'s trunk; they do exactly when both are codewords.
    """
    _require_reduced(C)
    r = relative_root(C, 1 << i)
    lower = r & ~(1 << i)
    if r in C.words and lower in C.words:
        return lower, r
    return None
