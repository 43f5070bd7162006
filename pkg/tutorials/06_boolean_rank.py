"""
Boolean rank
============

Exact rank by a minimum cover with maximal all-ones rectangles, cheap
bounds, the covering-chain upper bound, and the monomial rank lower bound.
Two isomorphic codes can have different Boolean rank.
"""

from pathlib import Path

from codemorph import brank_bounds, brank_chain, brank_exact, mrank_exact
from codemorph.rank import conjecture_scan
from codemorph.textio import format_matrix, read_code, read_matrix

DATA = Path(__file__).parent / "data"
C = read_matrix(DATA / "C.bmat")
Cp = read_matrix(DATA / "C_prime.bmat")
print("brank(C) =", brank_exact(C)[0], " brank(C') =", brank_exact(Cp)[0])

E = read_code(DATA / "example1.code")
r, V, H = brank_exact(E)
print("example: brank", r)
print(format_matrix(H), end="")

rep = brank_bounds(E)
print("lower bounds:", rep.lower_bounds)
print("upper bounds:", rep.upper_bounds)
print("mrank:", mrank_exact(E))

chain = brank_chain(E)
print("covering chain bound", chain.bound, "through neurons", [s.neuron + 1 for s in chain.steps])

# does brank(C) = brank(reduced C) + (non-simple redundancies)?
scan = conjecture_scan(60, 3, seed=0)
print(f"conjectured formula holds on {scan.agreements}/{len(scan.rows)} samples")
for row in scan.counterexamples[:3]:
    print(f"  {row.code} ({row.injected}): brank {row.brank}, predicted {row.predicted}")
