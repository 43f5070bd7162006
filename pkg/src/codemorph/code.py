"""Codes as bit-packed set systems: trunks, roots, redundancy, reduction, isomorphism."""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .bits import (
    DomainError,
    ResourceError,
    as_mask,
    bits_of,
    format_word,
    full_mask,
    parse_word,
    popcount,
    vec_to_mask,
    word_key,
)


@dataclass(frozen=True)
class Code:
    """A combinatorial code: a set of codewords, each a subset of ``range(n)``.

    Codewords are int bitmasks.  ``n`` may exceed the highest neuron that
    actually fires, so trailing trivial neurons are representable.
    """

    n: int
    words: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("neuron count must be non-negative")
        words = frozenset(as_mask(w) for w in self.words)
        top = full_mask(self.n)
        for w in words:
            if w & ~top:
                raise DomainError(f"codeword {format_word(w)} is not a subset of [{self.n}]")
        object.__setattr__(self, "words", words)

    @classmethod
    def from_words(cls, words: Iterable, n: int | None = None) -> "Code":
        masks = [as_mask(w) for w in words]
        if n is None:
            n = max((m.bit_length() for m in masks), default=0)
        return cls(n, frozenset(masks))

    @classmethod
    def from_strings(cls, words: Iterable[str], n: int | None = None) -> "Code":
        """Build from 1-based hand notation, e.g. ``["", "12", "23"]``."""
        return cls.from_words((parse_word(w) for w in words), n)

    @classmethod
    def from_matrix(cls, M) -> "Code":
        M = as_bitmatrix(M)
        return cls(M.shape[1], frozenset(vec_to_mask(row) for row in M))

    @classmethod
    def cube(cls, n: int) -> "Code":
        return cls(n, frozenset(range(1 << n)))

    def sorted_words(self) -> list[int]:
        return sorted(self.words, key=word_key)

    def matrix(self) -> np.ndarray:
        """Rows in :meth:`sorted_words` order; column ``j`` is neuron ``j``."""
        rows = self.sorted_words()
        M = np.zeros((len(rows), self.n), dtype=np.uint8)
        for r, w in enumerate(rows):
            for j in bits_of(w):
                M[r, j] = 1
        return M

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.sorted_words())

    def __contains__(self, w):
        return as_mask(w) in self.words

    def __str__(self):
        return "{" + ", ".join(format_word(w) for w in self.sorted_words()) + "}"


def as_bitmatrix(M) -> np.ndarray:
    """Validate and normalize a 0/1 matrix to a 2-D ``uint8`` array."""
    A = np.asarray(M)
    if A.ndim != 2:
        raise DomainError(f"expected a 2-D matrix, got shape {A.shape}")
    if A.size and not np.isin(A, (0, 1)).all():
        raise DomainError("matrix entries must be 0 or 1")
    return A.astype(np.uint8)


def trunk(C: Code, tau) -> frozenset:
    """All codewords of ``C`` containing ``tau``.

    ``tau`` may mention neurons outside ``[n]``; then nothing qualifies.
    """
    t = as_mask(tau)
    return frozenset(w for w in C.words if w & t == t)


def root(S: Iterable[int], n: int) -> int:
    """Intersection of the sets in ``S``; the empty family gives ``[n]``."""
    r = full_mask(n)
    for w in S:
        r &= w
    return r


def relative_root(C: Code, sigma) -> int:
    return root(trunk(C, sigma), C.n)


class NeuronStatus(enum.Enum):
    TRIVIAL = "trivial"
    REDUNDANT = "redundant"
    ESSENTIAL = "essential"


def _check_neuron(C: Code, i: int):
    if not 0 <= i < C.n:
        raise DomainError(f"neuron {i} out of range for a code on {C.n} neurons")


def neuron_status(C: Code, i: int) -> tuple[NeuronStatus, int | None]:
    """Classify neuron ``i``; for a redundant neuron also return the set it is redundant to.

    The witness is ``relative_root(C, {i}) - {i}``: if ``i`` is redundant to
    anything, it is redundant to that set, so no search over subsets is needed.
    """
    _check_neuron(C, i)
    bit = 1 << i
    ti = trunk(C, bit)
    if not ti:
        return NeuronStatus.TRIVIAL, None
    witness = root(ti, C.n) & ~bit
    if trunk(C, witness) == ti:
        return NeuronStatus.REDUNDANT, witness
    return NeuronStatus.ESSENTIAL, None


def is_free(C: Code, i: int) -> bool:
    """True iff the root of ``i``'s trunk is not itself a codeword."""
    _check_neuron(C, i)
    ti = trunk(C, 1 << i)
    if not ti:
        raise DomainError(f"neuron {i + 1} is trivial; free/rooted is undefined")
    return root(ti, C.n) not in C.words


def project(C: Code, keep: list[int]) -> Code:
    """Restrict ``C`` to the columns ``keep`` (in that order)."""
    words = set()
    for w in C.words:
        v = 0
        for k, j in enumerate(keep):
            if (w >> j) & 1:
                v |= 1 << k
        words.add(v)
    return Code(len(keep), frozenset(words))


class Reduction(NamedTuple):
    code: Code
    projection: np.ndarray
    kept: list
    redundant: list  # original indices deleted as redundant (trivial ones excluded)


def reduce(C: Code) -> Reduction:
    """Delete trivial neurons, then redundant ones one at a time.

    Redundant neurons are removed in ascending index order, rescanning after
    every deletion.  ``projection`` is the ``n x k`` column-selection matrix,
    so the reduced code's matrix equals ``C.matrix() @ projection`` over the
    Boolean semiring.
    """
    kept = [j for j in range(C.n) if any((w >> j) & 1 for w in C.words)]
    D = project(C, kept)
    redundant = []
    while True:
        for i in range(D.n):
            status, _ = neuron_status(D, i)
            if status is NeuronStatus.REDUNDANT:
                redundant.append(kept[i])
                kept = kept[:i] + kept[i + 1:]
                D = project(D, [j for j in range(D.n) if j != i])
                break
        else:
            break
    P = np.zeros((C.n, len(kept)), dtype=np.uint8)
    for k, j in enumerate(kept):
        P[j, k] = 1
    return Reduction(D, P, kept, redundant)


def is_reduced(C: Code) -> bool:
    return all(neuron_status(C, i)[0] is NeuronStatus.ESSENTIAL for i in range(C.n))


def enumerate_trunks(C: Code) -> frozenset:
    """All nonempty trunks of ``C``, each a frozenset of codewords.

    Every trunk is an intersection of simple trunks, so closing the simple
    trunks (plus ``C`` itself) under pairwise intersection finds them all.
    """
    words = C.sorted_words()
    index = {w: k for k, w in enumerate(words)}
    # work with trunks as bitmasks over codeword positions
    full = full_mask(len(words))
    simple = {full} if words else set()
    for i in range(C.n):
        m = 0
        for w in trunk(C, 1 << i):
            m |= 1 << index[w]
        if m:
            simple.add(m)
    family = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for a in frontier:
            for b in simple:
                x = a & b
                if x and x not in family:
                    family.add(x)
                    new.append(x)
        frontier = new
    return frozenset(frozenset(words[k] for k in bits_of(m)) for m in family)


def trunk_count(C: Code) -> int:
    """``t(C)``: the number of nonempty trunks."""
    return len(enumerate_trunks(C))


#: Widths up to this use the exact minimum over all column permutations.
EXACT_LABEL_MAX = 8


@functools.lru_cache(maxsize=None)
def _permutation_weights(k: int) -> np.ndarray:
    """``(k!, k)`` array: row ``p`` gives each column's bit weight under permutation ``p``."""
    perms = np.array(list(itertools.permutations(range(k))), dtype=np.int64).reshape(-1, k)
    W = np.zeros_like(perms)
    rows = np.arange(perms.shape[0])[:, None]
    W[rows, perms] = 1 << (k - 1 - np.arange(k))
    return W


#: leaf cap for the refinement search used on codes wider than ``EXACT_LABEL_MAX``.
LABEL_LEAF_BUDGET = 20_000


def _rank_rows(A: np.ndarray) -> np.ndarray:
    """Dense ranks of the rows of ``A`` in lexicographic order."""
    return np.unique(A, axis=0, return_inverse=True)[1].reshape(-1)


def _refine(B: np.ndarray, colors: np.ndarray) -> np.ndarray:
    """Color refinement on the word/neuron incidence matrix until stable."""
    n_cells = len(np.unique(colors))
    while True:
        rows = _rank_rows(B @ np.eye(colors.max() + 1, dtype=np.int64)[colors])
        R = int(rows.max()) + 1
        hist = np.stack([np.bincount(rows, weights=B[:, j], minlength=R) for j in range(B.shape[1])]).astype(np.int64)
        colors = _rank_rows(np.column_stack([colors, hist]))
        cells = len(np.unique(colors))
        if cells == n_cells:
            return colors
        n_cells = cells


def _min_rows_refined(words: list[int], k: int) -> tuple:
    """Least sorted-row tuple over the leaves of an individualize-and-refine tree.

    The tree depends only on the isomorphism class, so its minimum leaf is
    canonical.  Subtrees that are images of explored ones under a known
    automorphism fixing the current prefix are skipped.
    """
    B = np.array([[(w >> j) & 1 for j in range(k)] for w in words], dtype=np.int64)
    masks = np.sort(B @ (1 << np.arange(k, dtype=np.int64)))
    weights = 1 << np.arange(k - 1, -1, -1, dtype=np.int64)
    best = None
    best_order = None
    best_path: list = []
    autos: list = []
    leaves = 0

    def is_auto(perm) -> bool:
        moved = B @ (1 << np.asarray(perm, dtype=np.int64))
        return bool(np.array_equal(np.sort(moved), masks))

    def search(colors: np.ndarray, prefix: list[int]):
        nonlocal best, best_order, best_path, leaves
        colors = _refine(B, colors)
        counts = np.bincount(colors)
        if len(counts) == k:
            leaves += 1
            if leaves > LABEL_LEAF_BUDGET:
                raise ResourceError(f"canonical labeling of a {k}-neuron code needs more than {LABEL_LEAF_BUDGET} leaves")
            order = [int(j) for j in np.argsort(colors)]
            cand = tuple(int(v) for v in np.sort(B[:, order] @ weights))
            if best is None or cand < best:
                best, best_order, best_path = cand, order, list(prefix)
            elif cand == best:
                perm = [0] * k
                for a, b in zip(best_order, order):
                    perm[a] = b
                if is_auto(perm):
                    autos.append(perm)
                    # the branch that left the best path is an automorphic copy
                    return next((d for d, (a, b) in enumerate(zip(best_path, prefix)) if a != b), len(prefix))
            return None
        target = int(np.flatnonzero(counts > 1)[0])
        tried: list[int] = []
        for j in np.flatnonzero(colors == target):
            j = int(j)
            fixing = [g for g in autos if all(g[p] == p for p in prefix)]
            if any(_same_orbit(fixing, i, j, k) for i in tried):
                continue
            tried.append(j)
            child = 2 * colors + (colors == target)
            child[j] = 2 * target
            back = search(child, prefix + [j])
            if back is not None and back < len(prefix):
                return back
        return None

    search(np.zeros(k, dtype=np.int64), [])
    return best


def _same_orbit(gens: list, a: int, b: int, k: int) -> bool:
    if a == b:
        return True
    seen = {a}
    stack = [a]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y == b:
                return True
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def _min_rows_exact(words: list[int], k: int) -> tuple:
    B = np.array([[(w >> j) & 1 for j in range(k)] for w in words], dtype=np.int64)
    vals = np.sort(_permutation_weights(k) @ B.T, axis=1)  # (k!, m)
    # lexicographic minimum over rows of ``vals``
    best = vals[np.lexsort(vals.T[::-1])[0]]
    return tuple(int(v) for v in best)


def canonical_key(C: Code) -> tuple:
    """Hashable canonical form of ``C``'s isomorphism class.

    Reduce, then take the lexicographically least sorted-row matrix over
    column permutations (first column most significant).  Up to width
    ``EXACT_LABEL_MAX`` every permutation is tried; wider codes take the
    least leaf of an individualize-and-refine search, which is canonical but
    not always the global minimum.  Raises ``ResourceError`` when that search
    exceeds ``LABEL_LEAF_BUDGET`` leaves.
    """
    R = reduce(C).code
    k = R.n
    words = list(R.words)
    if not words:
        return (k, ())
    if k == 0:
        return (0, (0,))
    if k <= EXACT_LABEL_MAX:
        return (k, _min_rows_exact(words, k))
    return (k, _min_rows_refined(words, k))


def key_to_matrix(key: tuple) -> np.ndarray:
    k, rows = key
    M = np.zeros((len(rows), k), dtype=np.uint8)
    for r, v in enumerate(rows):
        for p in range(k):
            M[r, p] = (v >> (k - 1 - p)) & 1
    return M


def key_to_code(key: tuple) -> Code:
    return Code.from_matrix(key_to_matrix(key)) if key[1] else Code(key[0], frozenset())


def canonical_label(C: Code) -> np.ndarray:
    """Canonical representative matrix of ``C``'s isomorphism class."""
    return key_to_matrix(canonical_key(C))


def format_key(key: tuple) -> str:
    """Compact text form, e.g. ``"3:0,1,6"`` (width, then rows as integers)."""
    k, rows = key
    return f"{k}:" + ",".join(str(v) for v in rows)


def is_isomorphic(C: Code, D: Code) -> bool:
    return canonical_key(C) == canonical_key(D)


def closure_intersection(C: Code) -> Code:
    """Least superset of ``C`` closed under pairwise intersection."""
    return Code(C.n, _closure(C.words, lambda a, b: a & b))


def closure_union(C: Code) -> Code:
    """Least superset of ``C`` closed under pairwise union."""
    return Code(C.n, _closure(C.words, lambda a, b: a | b))


def _closure(words, op) -> frozenset:
    family = set(words)
    frontier = list(family)
    while frontier:
        new = []
        base = list(family)
        for a in frontier:
            for b in base:
                x = op(a, b)
                if x not in family:
                    family.add(x)
                    new.append(x)
        frontier = new
    return frozenset(family)


def is_intersection_complete(C: Code) -> bool:
    return all((a & b) in C.words for a in C.words for b in C.words)


def is_union_complete(C: Code) -> bool:
    return all((a | b) in C.words for a in C.words for b in C.words)
