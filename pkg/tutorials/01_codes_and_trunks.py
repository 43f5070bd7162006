"""
Codes, trunks and reduction
===========================

A code is a set of codewords, each a subset of the neurons 1..n.  Trunks
(all codewords containing a set) and roots (the intersection of a family)
drive everything else: redundancy, reduction and isomorphism.
"""

from pathlib import Path

from codemorph import Code, enumerate_trunks, is_isomorphic, neuron_status, reduce, relative_root, root, trunk, trunk_count
from codemorph.bits import format_word, parse_word
from codemorph.textio import read_code

DATA = Path(__file__).parent / "data"

# the running example; a .code file is one 0/1 row per codeword
C = read_code(DATA / "example1.code")
print("C =", C)

# trunk of {2}: every codeword containing neuron 2
print("tk(2) =", sorted(format_word(w) for w in trunk(C, parse_word("2"))))

# each nonempty trunk with its root
for T in sorted(enumerate_trunks(C), key=len, reverse=True):
    print(f"  root {format_word(root(T, C.n)):>5}  size {len(T)}")
print("t(C) =", trunk_count(C), " |C| =", len(C))

# the relative root of 1 is 12, so neuron 1 never fires without 2
print("root of tk(1):", format_word(relative_root(C, parse_word("1"))))

# a product column is redundant: neuron 3 fires exactly when 1 and 2 do
Cp = read_code(DATA / "C_prime.bmat")
for i in range(Cp.n):
    status, witness = neuron_status(Cp, i)
    note = "" if witness is None else f" (witness {format_word(witness)})"
    print(f"neuron {i + 1}: {status.name.lower()}{note}")

red = reduce(Cp)
print("reduced:", red.code, "kept", [j + 1 for j in red.kept])

# isomorphism is decided on reduced codes up to column order
print("C' isomorphic to the square?", is_isomorphic(Cp, Code.from_strings(["", "1", "2", "12"], 2)))
