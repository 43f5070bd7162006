"""Boolean rank: exact block-cover search, bounds, the covering-chain heuristic, monomial rank.

The exact solver covers the 1-entries of the matrix with as few all-ones
rectangles as possible.  Only maximal rectangles (formal concepts) need be
considered; branching is on the uncovered entry with the fewest candidate
rectangles, pruned by a greedy isolation-set lower bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bits import DomainError, ResourceError, bits_of, popcount
from .code import (
    Code,
    _closure,
    as_bitmatrix,
    canonical_key,
    enumerate_trunks,
    is_intersection_complete,
    project,
    reduce,
)
from .covering import covering_map, free_neurons
from .galois import bool_mul, residual
from .morphism import MorphismRep, compose

#: ``brank_exact`` refuses matrices whose smaller (deduplicated) side exceeds this.
EXACT_CAP = 20
#: ``mrank_exact`` limits: neurons, codewords.
MRANK_MAX_N = 10
MRANK_MAX_WORDS = 64
CHAIN_BUDGET = 10**5
#: covering-map evaluations spent on the chain inside ``brank_bounds``.
BOUNDS_CHAIN_BUDGET = 2000


@dataclass
class RankReport:
    brank: int | None = None
    lower_bounds: dict = field(default_factory=dict)
    upper_bounds: dict = field(default_factory=dict)
    certificate: tuple | None = None

    @property
    def lower(self) -> int:
        return max(self.lower_bounds.values(), default=0)

    @property
    def upper(self) -> int | None:
        return min(self.upper_bounds.values(), default=None)

    def to_dict(self) -> dict:
        from .textio import format_matrix

        out = {
            "brank": self.brank,
            "lower_bounds": dict(self.lower_bounds),
            "upper_bounds": dict(self.upper_bounds),
        }
        if self.certificate is not None:
            V, H = self.certificate
            out["certificate"] = {"V": format_matrix(V), "H": format_matrix(H)}
        return out


class _Blocks:
    """Distinct nonzero rows/columns of a matrix and its maximal all-ones rectangles."""

    def __init__(self, M: np.ndarray):
        self.M = M
        m, n = M.shape
        col_keys: dict = {}
        self.col_class = []
        for j in range(n):
            key = M[:, j].tobytes()
            if not M[:, j].any():
                self.col_class.append(None)
                continue
            self.col_class.append(col_keys.setdefault(key, len(col_keys)))
        self.cols = [None] * len(col_keys)
        for j, c in enumerate(self.col_class):
            if c is not None and self.cols[c] is None:
                self.cols[c] = j
        row_keys: dict = {}
        self.row_class = []
        for i in range(m):
            if not M[i].any():
                self.row_class.append(None)
                continue
            self.row_class.append(row_keys.setdefault(M[i].tobytes(), len(row_keys)))
        self.rows = [None] * len(row_keys)
        for i, c in enumerate(self.row_class):
            if c is not None and self.rows[c] is None:
                self.rows[c] = i
        self.m, self.n = len(self.rows), len(self.cols)
        # reduced 0/1 data as row bitmasks over reduced columns
        self.row_masks = []
        for i in self.rows:
            v = 0
            for c, j in enumerate(self.cols):
                if M[i, j]:
                    v |= 1 << c
            self.row_masks.append(v)

    def cell(self, r: int, c: int) -> int:
        return r * self.n + c

    def ones(self) -> int:
        out = 0
        for r, v in enumerate(self.row_masks):
            for c in bits_of(v):
                out |= 1 << self.cell(r, c)
        return out

    def concepts(self) -> list:
        """Maximal rectangles as ``(extent_mask, intent_mask, cell_mask)``."""
        intents = _closure(self.row_masks, lambda a, b: a & b)
        out = []
        for B in sorted(intents):
            if not B:
                continue
            A = 0
            for r, v in enumerate(self.row_masks):
                if v & B == B:
                    A |= 1 << r
            cells = 0
            for r in bits_of(A):
                for c in bits_of(B):
                    cells |= 1 << self.cell(r, c)
            out.append((A, B, cells))
        return out

    def isolated(self, e: int, f: int) -> bool:
        r1, c1 = divmod(e, self.n)
        r2, c2 = divmod(f, self.n)
        return not ((self.row_masks[r1] >> c2) & 1 and (self.row_masks[r2] >> c1) & 1)

    def factors(self, chosen: list) -> tuple:
        """Lift chosen rectangles back to factors of the original matrix."""
        m, n = self.M.shape
        r = len(chosen)
        V = np.zeros((m, r), dtype=np.uint8)
        H = np.zeros((r, n), dtype=np.uint8)
        for k, (A, B, _) in enumerate(chosen):
            for i in range(m):
                rc = self.row_class[i]
                if rc is not None and (A >> rc) & 1:
                    V[i, k] = 1
            for j in range(n):
                cc = self.col_class[j]
                if cc is not None and (B >> cc) & 1:
                    H[k, j] = 1
        return V, H


def isolation_bound(M) -> int:
    """Size of a greedily built isolation (fooling) set: a lower bound on Boolean rank."""
    blocks = _Blocks(as_bitmatrix(M))
    return _greedy_isolation(blocks, blocks.ones())


def _greedy_isolation(blocks: _Blocks, cells: int) -> int:
    chosen: list[int] = []
    for e in bits_of(cells):
        if all(blocks.isolated(e, f) for f in chosen):
            chosen.append(e)
    return len(chosen)


def _greedy_cover(concepts: list, cells: int) -> list:
    chosen = []
    while cells:
        best = max(concepts, key=lambda c: popcount(c[2] & cells))
        chosen.append(best)
        cells &= ~best[2]
    return chosen


def greedy_cover(M) -> tuple:
    """Greedy rectangle cover; returns ``(r, V, H)`` with ``VH == M``."""
    M = as_bitmatrix(M)
    blocks = _Blocks(M)
    chosen = _greedy_cover(blocks.concepts(), blocks.ones())
    V, H = blocks.factors(chosen)
    return len(chosen), V, H


def _check_cap(M: np.ndarray, blocks: _Blocks):
    if min(blocks.m, blocks.n) > EXACT_CAP:
        r, _, _ = greedy_cover(M)
        raise ResourceError(
            f"matrix has {blocks.m} distinct rows and {blocks.n} distinct columns; exact cap is {EXACT_CAP}",
            {"isolation_set": isolation_bound(M), "greedy_cover": r},
        )


def brank_exact(C, lower: int = 0) -> tuple:
    """Exact Boolean rank with a witness: returns ``(r, V, H)`` with ``VH == C``.

    ``lower`` is an optional known lower bound; the search stops as soon as a
    cover of that size is found.
    """
    M = as_bitmatrix(C.matrix() if isinstance(C, Code) else C)
    blocks = _Blocks(M)
    _check_cap(M, blocks)
    ones = blocks.ones()
    concepts = blocks.concepts()
    containing: dict = {}
    for idx, (_, _, cells) in enumerate(concepts):
        for e in bits_of(cells):
            containing.setdefault(e, []).append(idx)

    best = _greedy_cover(concepts, ones)
    floor = max(lower, _greedy_isolation(blocks, ones))

    def search(uncovered: int, chosen: list):
        nonlocal best
        if len(best) <= floor:
            return
        if not uncovered:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + _greedy_isolation(blocks, uncovered) >= len(best):
            return
        e = min(bits_of(uncovered), key=lambda x: len(containing[x]))
        options = sorted(containing[e], key=lambda k: -popcount(concepts[k][2] & uncovered))
        for k in options:
            chosen.append(concepts[k])
            search(uncovered & ~concepts[k][2], chosen)
            chosen.pop()

    search(ones, [])
    V, H = blocks.factors(best)
    assert np.array_equal(bool_mul(V, H), M)
    return len(best), V, H


def mrank_exact(C) -> int:
    """Fewest monomials ``x^tau`` whose values separate all codewords.

    Only trunks matter (``c^tau`` is the indicator of ``tk(tau)``), so the
    search picks separating families among the proper nonempty trunks, by
    iterative deepening with a partition-counting bound.
    """
    code = C if isinstance(C, Code) else Code.from_matrix(C)
    m = len(code)
    if code.n > MRANK_MAX_N or m > MRANK_MAX_WORDS:
        lo = math.ceil(math.log2(m)) if m > 1 else 0
        raise ResourceError(
            f"monomial rank search limited to n <= {MRANK_MAX_N} and at most {MRANK_MAX_WORDS} codewords",
            {"log2_words": lo, "neurons": code.n},
        )
    if m <= 1:
        return 0
    words = code.sorted_words()
    index = {w: k for k, w in enumerate(words)}
    full = (1 << m) - 1
    cands = []
    for T in enumerate_trunks(code):
        mask = 0
        for w in T:
            mask |= 1 << index[w]
        if mask != full:
            cands.append(mask)
    cands.sort(key=lambda x: (-popcount(x), x))

    def refine(classes: list, S: int) -> list:
        out = []
        for cl in classes:
            a, b = cl & S, cl & ~S
            out.extend(x for x in (a, b) if x)
        return out

    def search(classes, start, left) -> bool:
        if len(classes) == m:
            return True
        if left == 0 or len(classes) << left < m:
            return False
        for k in range(start, len(cands)):
            new = refine(classes, cands[k])
            if len(new) > len(classes) and search(new, k + 1, left - 1):
                return True
        return False

    r = math.ceil(math.log2(m))
    while not search([full], 0, r):
        r += 1
    return r


@dataclass
class ChainResult:
    bound: int
    steps: list
    V: np.ndarray
    H: np.ndarray
    complete: bool  # False when the budget ran out
    nodes: int
    evaluations: int


def brank_chain(C, budget: int = CHAIN_BUDGET) -> ChainResult:
    """Upper bound on Boolean rank by chaining covering maps at free neurons.

    ``budget`` caps the number of covering maps evaluated.  Images wider
    than the reduced input are not explored.  Works on the reduced code;
    ``k`` redundant columns of the input add ``k``
    to the bound, and the certificate is extended with those columns
    (identity block in ``H``).
    """
    M = as_bitmatrix(C.matrix() if isinstance(C, Code) else C)
    code = Code.from_matrix(M)
    red = reduce(code)
    start = red.code
    ident = MorphismRep.identity(start.n)
    best = (start.n, start, ident)
    parent: dict = {canonical_key(start): None}
    # depth-first, children in ascending free-neuron order
    stack = [(start, ident, iter(free_neurons(start)))]
    nodes = 1
    evaluations = 0
    complete = True
    while stack:
        node, total, pending = stack[-1]
        i = next(pending, None)
        if i is None:
            stack.pop()
            continue
        if evaluations >= budget:
            complete = False
            break
        evaluations += 1
        step = covering_map(node, i)
        assert step.is_bmf_step
        if not step.reduced_bmf or step.image.n > start.n:
            # no rank bound from a non-factor image; wider images are not explored
            continue
        key = canonical_key(step.image)
        if key in parent:
            continue
        nodes += 1
        parent[key] = (canonical_key(node), step)
        rep = compose(total, step.rep)
        if step.image.n < best[0]:
            best = (step.image.n, step.image, rep)
        stack.append((step.image, rep, iter(free_neurons(step.image))))

    steps = []
    key = canonical_key(best[1])
    while parent[key] is not None:
        key, step = parent[key]
        steps.append(step)
    steps.reverse()

    # certificate for the reduced code, then extend to the input's columns
    H_red = best[2].matrix
    R = start.matrix()
    V_red = residual(R, H_red)
    assert np.array_equal(bool_mul(V_red, H_red), R)
    row_of = {w: V_red[k] for k, w in enumerate(start.sorted_words())}
    m, n = M.shape
    r = H_red.shape[0]
    k = len(red.redundant)
    V = np.zeros((m, r + k), dtype=np.uint8)
    H = np.zeros((r + k, n), dtype=np.uint8)
    for c, j in enumerate(red.kept):
        H[:r, j] = H_red[:, c]
    reduced_words = project(code, red.kept)
    for i in range(m):
        w = 0
        for c, j in enumerate(red.kept):
            if M[i, j]:
                w |= 1 << c
        assert w in reduced_words.words
        V[i, :r] = row_of[w]
    for extra, j in enumerate(red.redundant):
        V[:, r + extra] = M[:, j]
        H[r + extra, j] = 1
    assert np.array_equal(bool_mul(V, H), M)
    return ChainResult(best[0] + k, steps, V, H, complete, nodes, evaluations)


def brank_bounds(C, exact_reduced: bool = True) -> RankReport:
    """Cheap lower and upper bounds on Boolean rank, no exact search on ``C`` itself.

    ``exact_reduced`` lets the redundancy bound recurse into an exact solve of
    the reduced code when that is within the exact cap.
    """
    M = as_bitmatrix(C.matrix() if isinstance(C, Code) else C)
    m, n = M.shape
    report = RankReport()
    if not M.any():
        report.brank = 0
        report.lower_bounds["isolation_set"] = 0
        report.upper_bounds["trivial"] = 0
        report.certificate = (np.zeros((m, 0), np.uint8), np.zeros((0, n), np.uint8))
        return report
    code = Code.from_matrix(M)
    red = reduce(code)
    report.lower_bounds["isolation_set"] = isolation_bound(M)
    report.upper_bounds["trivial"] = min(len(code), n)
    r_greedy, V, H = greedy_cover(M)
    report.upper_bounds["greedy_cover"] = r_greedy
    report.certificate = (V, H)
    try:
        report.lower_bounds["mrank"] = mrank_exact(code)
    except ResourceError:
        pass
    if is_intersection_complete(code):
        # full rank on the reduced presentation, which never exceeds the input's rank
        value = min(len(red.code), red.code.n)
        report.lower_bounds["intersection_complete"] = value
        if not red.redundant:
            report.upper_bounds["intersection_complete"] = value
    k = len(red.redundant)
    if exact_reduced and k:
        try:
            r_red, _, _ = brank_exact(red.code.matrix())
            report.lower_bounds["reduced"] = r_red
        except ResourceError:
            r_red, _, _ = greedy_cover(red.code.matrix())
        report.upper_bounds["redundancy"] = r_red + k
    chain = brank_chain(M, budget=BOUNDS_CHAIN_BUDGET)
    report.upper_bounds["covering_chain"] = chain.bound
    if chain.bound < r_greedy:
        report.certificate = (chain.V, chain.H)
    if report.lower == report.upper:
        report.brank = report.lower
    return report


def brank_report(C) -> RankReport:
    """Bounds plus the exact value and a minimum-size certificate."""
    M = as_bitmatrix(C.matrix() if isinstance(C, Code) else C)
    _check_cap(M, _Blocks(M))
    report = brank_bounds(M)
    r, V, H = brank_exact(M, lower=report.lower)
    report.brank = r
    report.certificate = (V, H)
    return report


# -- redundancy experiment -------------------------------------------------


def simple_reduction(C: Code) -> tuple:
    """Drop trivial, all-ones and duplicate columns (first copy kept).

    These are exactly the simple redundancies; returns ``(code, kept)``.
    """
    kept = []
    seen = set()
    allw = list(C.words)
    for j in range(C.n):
        col = tuple((w >> j) & 1 for w in allw)
        if not any(col) or all(col) or col in seen:
            continue
        seen.add(col)
        kept.append(j)
    return project(C, kept), kept


def nonsimple_redundancy_count(C: Code) -> int:
    """Number of redundant neurons left once simple redundancies are removed."""
    D, _ = simple_reduction(C)
    return D.n - reduce(C).code.n


@dataclass
class ConjectureRow:
    code: Code
    injected: str
    k: int
    ell: int
    brank: int
    brank_reduced: int

    @property
    def predicted(self) -> int:
        return self.brank_reduced + self.ell

    @property
    def agrees(self) -> bool:
        return self.brank == self.predicted


@dataclass
class ConjectureReport:
    rows: list

    @property
    def agreements(self) -> int:
        return sum(r.agrees for r in self.rows)

    @property
    def counterexamples(self) -> list:
        return [r for r in self.rows if not r.agrees]

    def to_dict(self) -> dict:
        from .textio import format_code

        return {
            "samples": len(self.rows),
            "agreements": self.agreements,
            "counterexamples": [
                {
                    "code": format_code(r.code),
                    "injected": r.injected,
                    "k": r.k,
                    "ell": r.ell,
                    "brank": r.brank,
                    "brank_reduced": r.brank_reduced,
                }
                for r in self.counterexamples
            ],
        }


def inject_column(C: Code, kind: str, rng) -> Code:
    """Append one redundant column: ``duplicate``, ``ones`` or ``product`` of 2+ columns."""
    n = C.n
    if kind == "ones":
        col = {w: 1 for w in C.words}
    elif kind in ("duplicate", "product") and n < {"duplicate": 1, "product": 2}[kind]:
        raise DomainError(f"cannot inject a {kind} column into a code on {n} neurons")
    elif kind == "duplicate":
        j = int(rng.integers(n))
        col = {w: (w >> j) & 1 for w in C.words}
    elif kind == "product":
        size = int(rng.integers(2, n + 1))
        js = rng.choice(n, size=size, replace=False)
        col = {w: int(all((w >> int(j)) & 1 for j in js)) for w in C.words}
    else:
        raise DomainError(f"unknown injection kind {kind!r}")
    return Code(n + 1, frozenset(w | (col[w] << n) for w in C.words))


def conjecture_scan(samples: int, n_max: int, seed: int = 0, kinds=("duplicate", "ones", "product")) -> ConjectureReport:
    """Compare ``brank(C)`` with ``brank(reduced C) + ell`` on random codes with injected redundancy.

    Each sample is a random code, reduced, with one redundant column appended.
    """
    rng = np.random.default_rng(seed)
    rows = []
    for _ in range(samples):
        kind = str(rng.choice(list(kinds)))
        need = {"product": 2, "duplicate": 1}.get(kind, 0)
        while True:
            n = int(rng.integers(max(1, need), max(n_max, need) + 1))
            words = [w for w in range(1 << n) if rng.random() < 0.5] or [int(rng.integers(1 << n))]
            C = reduce(Code(n, frozenset(words))).code
            if C.n >= need:
                break
        C = inject_column(C, kind, rng)
        red = reduce(C)
        rows.append(
            ConjectureRow(
                code=C,
                injected=kind,
                k=len(red.redundant),
                ell=nonsimple_redundancy_count(C),
                brank=brank_exact(C.matrix())[0],
                brank_reduced=brank_exact(red.code.matrix())[0],
            )
        )
    return ConjectureReport(rows)
