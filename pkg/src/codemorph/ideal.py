"""Pseudomonomials over F_2, canonical forms of neural ideals, and completions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .bits import DomainError, ResourceError, bits_of, full_mask, popcount
from .code import Code, closure_intersection, closure_union  # noqa: F401  (re-exported)

#: Largest ``n`` for which we scan all ``2**n`` points or ``3**n`` pseudomonomials.
MAX_SCAN_N = 20


@dataclass(frozen=True, order=True)
class Pseudomonomial:
    """``x^sigma (1-x)^tau`` with disjoint bitmasks ``sigma`` and ``tau``."""

    sigma: int
    tau: int

    def __post_init__(self):
        if self.sigma < 0 or self.tau < 0:
            raise DomainError("negative bitmask")
        if self.sigma & self.tau:
            raise DomainError("pseudomonomial is not squarefree: sigma and tau overlap")

    @property
    def degree(self) -> int:
        return popcount(self.sigma) + popcount(self.tau)

    @property
    def support(self) -> int:
        return self.sigma | self.tau

    def __call__(self, word: int) -> int:
        return int(word & self.sigma == self.sigma and not word & self.tau)

    def divides(self, other: "Pseudomonomial") -> bool:
        return self.sigma & ~other.sigma == 0 and self.tau & ~other.tau == 0

    def sort_key(self):
        pos = sorted(bits_of(self.sigma))
        neg = sorted(bits_of(self.tau))
        return (self.degree, pos, neg)

    def __str__(self):
        factors = [f"x{i + 1}" for i in bits_of(self.sigma)]
        factors += [f"(1-x{i + 1})" for i in bits_of(self.tau)]
        return "*".join(factors) if factors else "1"


ONE = Pseudomonomial(0, 0)


@dataclass(frozen=True)
class CanonicalForm:
    """A divisibility-minimal set of pseudomonomials, kept in a fixed order."""

    elements: tuple
    n: int

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, p):
        return p in self.elements

    def as_set(self) -> frozenset:
        return frozenset(self.elements)

    def __str__(self):
        return "\n".join(str(p) for p in self.elements)


def _sorted(ps: Iterable[Pseudomonomial]) -> tuple:
    return tuple(sorted(set(ps), key=Pseudomonomial.sort_key))


def _check_width(p: Pseudomonomial, n: int):
    if p.support & ~full_mask(n):
        raise DomainError(f"{p} mentions neurons beyond n={n}")


def vanishes(p: Pseudomonomial, C: Code) -> bool:
    """True iff ``p`` evaluates to 0 on every codeword."""
    _check_width(p, C.n)
    return not any(p(w) for w in C.words)


def all_pseudomonomials(n: int):
    """Every squarefree pseudomonomial on ``n`` variables, by increasing degree."""
    out = []
    for signs in itertools.product((0, 1, 2), repeat=n):
        sigma = tau = 0
        for i, s in enumerate(signs):
            if s == 1:
                sigma |= 1 << i
            elif s == 2:
                tau |= 1 << i
        out.append(Pseudomonomial(sigma, tau))
    out.sort(key=Pseudomonomial.degree.fget)
    return out


def canonical_form(C: Code) -> CanonicalForm:
    """Minimal squarefree pseudomonomials vanishing on ``C``, by a 3^n scan.

    Candidates are visited by increasing degree; one that vanishes is kept
    unless an already kept element divides it, which leaves exactly the
    divisibility-minimal ones.  The empty code gets the sentinel ``{1}``.
    """
    if C.n > MAX_SCAN_N:
        raise DomainError(f"n={C.n} exceeds the scan limit {MAX_SCAN_N}")
    if not C.words:
        return CanonicalForm((ONE,), C.n)
    words = list(C.words)
    kept: list[Pseudomonomial] = []
    for p in all_pseudomonomials(C.n):
        if any(q.divides(p) for q in kept):
            continue
        s, t = p.sigma, p.tau
        if not any(w & s == s and not w & t for w in words):
            kept.append(p)
    return CanonicalForm(_sorted(kept), C.n)


def separator(p: Pseudomonomial, q: Pseudomonomial) -> int:
    """Neurons ``i`` with ``x_i(1-x_i)`` dividing ``pq``."""
    return (p.sigma & q.tau) | (p.tau & q.sigma)


def is_canonical(G: Iterable[Pseudomonomial]):
    """Check the two-part canonicality criterion.

    Returns ``(ok, witness)``: ``witness`` is the offending pair ``(p, q)`` when
    one divides the other or when their single-neuron separator has no
    element of ``G`` dividing the reduced product.
    """
    elems = list(G)
    for p in elems:
        if not isinstance(p, Pseudomonomial):
            raise DomainError(f"not a pseudomonomial: {p!r}")
    for p, q in itertools.permutations(elems, 2):
        if p.divides(q):
            return False, (p, q)
    for p, q in itertools.combinations(elems, 2):
        sep = separator(p, q)
        if popcount(sep) != 1:
            continue
        sigma = (p.sigma | q.sigma) & ~sep
        tau = (p.tau | q.tau) & ~sep
        quotient = Pseudomonomial(sigma, tau)
        if not any(r.divides(quotient) for r in elems):
            return False, (p, q)
    return True, None


def _require_canonical(G: CanonicalForm):
    ok, witness = is_canonical(G.elements)
    if not ok:
        p, q = witness
        raise DomainError(f"not a canonical form: pair {p}, {q} violates the criterion")


def intersection_completion_cf(G: CanonicalForm) -> CanonicalForm:
    """Canonical form of the intersection completion: keep elements with ``|tau| <= 1``."""
    _require_canonical(G)
    return CanonicalForm(tuple(p for p in G.elements if popcount(p.tau) <= 1), G.n)


def union_completion_cf(G: CanonicalForm) -> CanonicalForm:
    """Canonical form of the union completion: keep elements with ``|sigma| <= 1``."""
    _require_canonical(G)
    return CanonicalForm(tuple(p for p in G.elements if popcount(p.sigma) <= 1), G.n)


def code_of_cf(G: Iterable[Pseudomonomial], n: int) -> Code:
    """Common zero set of ``G`` inside ``{0,1}^n``."""
    if n > MAX_SCAN_N:
        raise DomainError(f"n={n} exceeds the scan limit {MAX_SCAN_N}")
    elems = list(G)
    for p in elems:
        _check_width(p, n)
    return Code(n, frozenset(c for c in range(1 << n) if not any(p(c) for p in elems)))


#: Largest ``n`` for :func:`cf_census`; ``n = 4`` already means 65536 codes.
MAX_CENSUS_N = 4


def cf_census(n: int) -> dict:
    """Canonical-form sizes over every nonempty code on ``n`` neurons.

    Returns ``{"n", "codes", "histogram", "max_size", "witness"}`` where the
    histogram maps size to number of codes and ``witness`` is the first code
    (in bitmask order) reaching the maximum.
    """
    if n > MAX_CENSUS_N:
        raise ResourceError(
            f"census over 2**{1 << n} codes is too large; limit is n <= {MAX_CENSUS_N}",
            bounds={"n": n, "max_n": MAX_CENSUS_N},
        )
    if n < 0:
        raise DomainError("neuron count must be non-negative")
    hist: dict = {}
    best, witness = -1, None
    for mask in range(1, 1 << (1 << n)):
        C = Code(n, frozenset(w for w in range(1 << n) if (mask >> w) & 1))
        size = len(canonical_form(C).elements)
        hist[size] = hist.get(size, 0) + 1
        if size > best:
            best, witness = size, C
    return {"n": n, "codes": (1 << (1 << n)) - 1, "histogram": dict(sorted(hist.items())), "max_size": best, "witness": witness}
