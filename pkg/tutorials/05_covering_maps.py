"""
Covering maps, free neurons and defect
======================================

A covering map at neuron i lowers the trunk count by exactly one.  It is a
Boolean factorization exactly when i is free, that is, when the root of
tk(i) is not itself a codeword.  The defect t(C) - |C| drops by one unless
two codewords collide.
"""

from pathlib import Path

from codemorph import Code, collision_check, covering_map, defect, free_neurons
from codemorph.bits import format_word
from codemorph.textio import read_code

DATA = Path(__file__).parent / "data"
C = read_code(DATA / "example1.code")
print("C =", C, " defect", defect(C))
print("free neurons:", [i + 1 for i in free_neurons(C)])

print("neuron  BMF  |image|  t  d")
for i in range(C.n):
    s = covering_map(C, i)
    print(f"{i + 1:>6}  {'yes' if s.is_bmf_step else 'no':>3}  {len(s.image):>7}  {s.t_image}  {s.t_image - len(s.image)}")

# the image lives on new neurons built from 2 and its partners
s = covering_map(C, 1)
print("image at 2:", s.image, "via", s.rep)

# a collision keeps the defect: 2 and 12 merge at neuron 1
D = Code.from_strings(["", "2", "12"], 2)
a, b = collision_check(D, 0)
s = covering_map(D, 0)
print(f"{D}: {format_word(a)} and {format_word(b)} collide, defect drop {s.defect_drop}")
