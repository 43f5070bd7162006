"""
Canonical forms and completions
===============================

The canonical form lists the minimal pseudomonomials x^a (1-x)^b that
vanish on a code.  Filtering it gives the intersection and union
completions without touching the codewords.
"""

from pathlib import Path

from codemorph import canonical_form, closure_intersection, closure_union, code_of_cf
from codemorph.ideal import cf_census, intersection_completion_cf, union_completion_cf
from codemorph.textio import format_cf, read_code

DATA = Path(__file__).parent / "data"
C = read_code(DATA / "example1.code")

G = canonical_form(C)
print("CF(C):")
print(format_cf(G), end="")

# the code is recovered as the common zero set
assert code_of_cf(G, C.n) == C

# completions: keep only the pseudomonomials of the right shape
Gi = intersection_completion_cf(G)
Gu = union_completion_cf(G)
print("intersection completion:", code_of_cf(Gi, C.n))
print("union completion:       ", code_of_cf(Gu, C.n))
assert code_of_cf(Gi, C.n) == closure_intersection(C)
assert code_of_cf(Gu, C.n) == closure_union(C)

# how large can a canonical form get on three neurons?
census = cf_census(3)
print("CF sizes over all", census["codes"], "codes on 3 neurons:", census["histogram"])
print("largest:", census["max_size"], "for", census["witness"])
