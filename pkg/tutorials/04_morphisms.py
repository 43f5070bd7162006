"""
Morphisms of codes
==================

A morphism is given by a tuple of sets (tau_1, ..., tau_r): a codeword c
maps to {j : tau_j is inside c}.  It is a BMF when the canonical adjoint
recovers every codeword, i.e. C = VT for the tuple's matrix T.
"""

from pathlib import Path

from codemorph import MorphismRep, apply, compose, is_bmf
from codemorph.bits import parse_word
from codemorph.morphism import canonical_representative
from codemorph.textio import read_code

DATA = Path(__file__).parent / "data"
C = read_code(DATA / "example1.code")

# three "edges" of the path 1-2-3-4
f = MorphismRep(4, tuple(parse_word(s) for s in ("12", "23", "34")))
out = apply(f, C)
print("f =", f, " image:", out.image)
print("f is a BMF:", is_bmf(C, f))

# the canonical representative replaces each tau by the root of its trunk
print("canonical:", canonical_representative(C, f))

# forgetting neuron 4 loses information
g = MorphismRep(4, tuple(parse_word(s) for s in ("1", "2", "3")))
print("g =", g, " image:", apply(g, C).image, " BMF:", is_bmf(C, g))

# composition multiplies the matrices over the Boolean semiring
h = MorphismRep(3, (parse_word("12"),))
print("h after f =", compose(f, h, C))
