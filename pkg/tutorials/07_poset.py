"""
The morphism poset
==================

Starting from every reduced code on three neurons, apply covering maps
until nothing new appears.  Nodes are isomorphism classes, ranked by trunk
count; solid edges are Boolean factorizations.
"""

import sys
from collections import Counter

from codemorph import downset, enumerate_reduced_codes
from codemorph.poset import export_dot

seeds = enumerate_reduced_codes(3)
G = downset(seeds)
print(len(seeds), "seed classes,", len(G.nodes), "classes in the down-set")
print("classes by minimum neuron number:", dict(sorted(Counter(v.lam for v in G.nodes.values()).items())))
print(len(G.edges), "covering edges,", sum(e.bmf for e in G.edges), "of them BMF")

# a small picture: the down-set of the two-neuron square
small = downset(enumerate_reduced_codes(2))
if "--dot" in sys.argv:
    sys.stdout.write(export_dot(small))
else:
    print(f"two-neuron down-set: {len(small.nodes)} classes (run with --dot for Graphviz)")
