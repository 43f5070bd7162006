"""
The Galois pair of a matrix and Boolean factorization
=====================================================

For a 0/1 matrix H, F(x) = xH and G(y) = rows of H inside y form a Galois
connection.  The residual C:H is the largest V with VH <= C, so C has a
factorization with right factor H exactly when (C:H)H = C.
"""

from pathlib import Path

import numpy as np

from codemorph import F_H, G_H, bool_mul, image_F, image_G, residual
from codemorph.textio import format_matrix, read_matrix

DATA = Path(__file__).parent / "data"
H = read_matrix(DATA / "H.bmat")
C = read_matrix(DATA / "example1.code")
print("H =")
print(format_matrix(H), end="")

x = np.array([1, 0, 1], dtype=np.uint8)
y = F_H(x, H)
print("F(101) =", y, " G(F(101)) =", G_H(y, H))

# F and G restrict to inverse bijections between their images
print("image of F:", image_F(H))
print("image of G:", image_G(H))

V = residual(C, H)
print("V = C:H =")
print(format_matrix(V), end="")
print("VH == C:", np.array_equal(bool_mul(V, H), C))

# drop one 1 from H and the factorization fails
H2 = H.copy()
H2[1, 2] = 0
print("with a weaker H:", np.array_equal(bool_mul(residual(C, H2), H2), C))
