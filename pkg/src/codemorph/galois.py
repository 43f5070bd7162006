"""Boolean-semiring matrix kernel: products, residuals and the adjoint pair of a matrix.

Vectors are rows.  ``F_H(x) = xH`` and ``G_H(x) = x:H``; for a fixed ``H`` these
form a Galois connection between ``{0,1}^r`` and ``{0,1}^n``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bits import DomainError, vec_to_mask
from .code import Code, as_bitmatrix, closure_union


def bool_mul(A, B) -> np.ndarray:
    """Boolean product ``(AB)_ik = OR_j A_ij AND B_jk``."""
    A = as_bitmatrix(A)
    B = as_bitmatrix(B)
    if A.shape[1] != B.shape[0]:
        raise DomainError(f"inner dimensions differ: {A.shape} x {B.shape}")
    return (A.astype(np.int64) @ B.astype(np.int64) > 0).astype(np.uint8)


def residual(B, A) -> np.ndarray:
    """``B:A = NOT((NOT B) A^T)``, the largest ``X`` with ``XA <= B``."""
    B = as_bitmatrix(B)
    A = as_bitmatrix(A)
    if B.shape[1] != A.shape[1]:
        raise DomainError(f"column counts differ: {B.shape} vs {A.shape}")
    return (1 - bool_mul(1 - B, A.T)).astype(np.uint8)


def _vec(x, width: int) -> np.ndarray:
    v = np.asarray(x, dtype=np.uint8).reshape(-1)
    if v.shape[0] != width:
        raise DomainError(f"vector has width {v.shape[0]}, expected {width}")
    if v.size and not np.isin(v, (0, 1)).all():
        raise DomainError("vector entries must be 0 or 1")
    return v


def F_H(x, H) -> np.ndarray:
    """Lower adjoint: ``xH``, the union of the rows of ``H`` picked out by ``x``."""
    H = as_bitmatrix(H)
    v = _vec(x, H.shape[0])
    return bool_mul(v[None, :], H)[0]


def G_H(x, H) -> np.ndarray:
    """Upper adjoint: coordinate ``j`` is 1 iff row ``j`` of ``H`` lies inside ``x``."""
    H = as_bitmatrix(H)
    v = _vec(x, H.shape[1])
    return np.array([int(np.all(v[row == 1] == 1)) for row in H], dtype=np.uint8)


def G_H_complement(x, H) -> np.ndarray:
    """Same map as :func:`G_H`, written as ``NOT((NOT x) H^T)``."""
    H = as_bitmatrix(H)
    v = _vec(x, H.shape[1])
    return residual(v[None, :], H)[0]


@dataclass(frozen=True)
class GaloisPair:
    """The adjoint pair ``(x -> xH, x -> x:H)`` of an ``r x n`` matrix."""

    H: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "H", as_bitmatrix(self.H))
        object.__setattr__(self, "_rows", tuple(vec_to_mask(row) for row in self.H))

    @property
    def r(self) -> int:
        return self.H.shape[0]

    @property
    def n(self) -> int:
        return self.H.shape[1]

    def lower(self, x) -> np.ndarray:
        return F_H(x, self.H)

    def upper(self, x) -> np.ndarray:
        return G_H(x, self.H)

    def lower_mask(self, a: int) -> int:
        out = 0
        for j, row in enumerate(self._rows):
            if (a >> j) & 1:
                out |= row
        return out

    def upper_mask(self, b: int) -> int:
        out = 0
        for j, row in enumerate(self._rows):
            if row & b == row:
                out |= 1 << j
        return out


def image_F(H) -> Code:
    """Image of ``x -> xH``: the union completion of the rows of ``H``, plus the empty word."""
    H = as_bitmatrix(H)
    rows = Code.from_matrix(H)
    return closure_union(Code(H.shape[1], rows.words | {0}))


def image_G(H) -> Code:
    """Image of ``x -> x:H``, by evaluating every ``x`` in ``{0,1}^n``."""
    H = as_bitmatrix(H)
    r, n = H.shape
    if n > 20:
        raise DomainError(f"n={n} too large to enumerate the domain of G_H")
    pair = GaloisPair(H)
    return Code(r, frozenset(pair.upper_mask(b) for b in range(1 << n)))


def is_H_maximal(V, H) -> bool:
    """True iff ``V == (VH):H``."""
    V = as_bitmatrix(V)
    return bool(np.array_equal(V, residual(bool_mul(V, H), H)))

