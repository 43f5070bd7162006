"""Randomized and exhaustive property suites.

Each ``check_*`` function returns a :class:`CheckResult`.  Expected values
come from brute force (enumerating subsets, matrices, or factors) rather
than from the routines being checked.  The ``verify`` CLI command and the
acceptance tests both run these.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .bits import DomainError, bits_of, full_mask, popcount
from .code import (
    Code,
    NeuronStatus,
    canonical_key,
    closure_intersection,
    closure_union,
    enumerate_trunks,
    is_intersection_complete,
    is_reduced,
    is_union_complete,
    neuron_status,
    project,
    reduce,
    relative_root,
    root,
    trunk,
    trunk_count,
)
from .covering import collision_check, covering_map, defect
from .galois import F_H, G_H, G_H_complement, GaloisPair, bool_mul, residual
from .ideal import (
    all_pseudomonomials,
    canonical_form,
    code_of_cf,
    intersection_completion_cf,
    is_canonical,
    union_completion_cf,
    vanishes,
)
from .morphism import (
    MorphismRep,
    apply,
    bmf_reduce_source,
    bmf_reduce_target,
    canonical_representative,
    compose,
    drop_trivial_image_neurons,
    is_bmf,
)
from .rank import brank_chain, brank_exact, mrank_exact

DEFAULT_SEED = 20240607


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    violations: int = 0
    examples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.violations == 0 and self.cases > 0

    def record(self, good: bool, detail=None):
        self.cases += 1
        if not good:
            self.violations += 1
            if len(self.examples) < 5:
                self.examples.append(detail)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status}  {self.name}: {self.cases} cases, {self.violations} violations"


# -- generators ------------------------------------------------------------


def random_code(rng, n: int, density: float | None = None) -> Code:
    """Nonempty random code on ``n`` neurons; each word kept with probability ``density``."""
    p = rng.uniform(0.15, 0.85) if density is None else density
    words = [w for w in range(1 << n) if rng.random() < p]
    if not words:
        words = [int(rng.integers(1 << n))]
    return Code(n, frozenset(words))


def random_reduced_code(rng, n: int, tries: int = 10_000) -> Code:
    """Rejection-sample a reduced code with exactly ``n`` neurons."""
    for _ in range(tries):
        C = random_code(rng, n)
        if is_reduced(C):
            return C
    raise RuntimeError(f"no reduced code on {n} neurons after {tries} tries")


def all_codes(n: int):
    for mask in range(1 << (1 << n)):
        yield Code(n, frozenset(w for w in range(1 << n) if (mask >> w) & 1))


def all_reduced_codes(n_max: int):
    """Every reduced code (not just one per class) on 0..n_max neurons."""
    for n in range(n_max + 1):
        for C in all_codes(n):
            if C.words and is_reduced(C):
                yield C


def random_matrix(rng, m: int, n: int) -> np.ndarray:
    return (rng.random((m, n)) < rng.uniform(0.2, 0.8)).astype(np.uint8)


def _subsets(mask: int):
    """All submasks of ``mask``."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


# -- code core -------------------------------------------------------------


def check_trunk_lemmas(samples: int = 1000, n_max: int = 6, seed: int = DEFAULT_SEED) -> CheckResult:
    """Roots of intersections, trunk/root containment, the elementary trunk facts, ``|C| <= t(C)``."""
    rng = np.random.default_rng(seed)
    res = CheckResult("trunk lemmas")
    for _ in range(samples):
        n = int(rng.integers(1, n_max + 1))
        C = random_code(rng, n)
        trunks = list(enumerate_trunks(C))
        # nonempty trunks by brute force over all generators
        brute = {trunk(C, s) for s in range(1 << n)} - {frozenset()}
        res.record(set(trunks) == brute, ("trunk enumeration", C))
        for S, T in itertools.combinations_with_replacement(trunks, 2):
            rS, rT, rST = root(S, n), root(T, n), root(S & T, n)
            res.record((rS | rT) & ~rST == 0, ("roots of intersections", C))
        for i, j in itertools.product(range(n), repeat=2):
            ti, tj = trunk(C, 1 << i), trunk(C, 1 << j)
            if not ti or not tj:
                continue
            ri = relative_root(C, 1 << i)
            rij = relative_root(C, (1 << i) | (1 << j))
            strict = rij != ri and rij & ri == ri
            res.record((ti & tj != ti) == strict, ("containment", C, i, j))
        for s in range(1 << n):
            res.record(s & relative_root(C, s) == s, ("inside own root", C, s))
        for T in trunks:
            res.record(trunk(C, root(T, n)) == T, ("trunk of root", C))
        for w in C.words:
            res.record(relative_root(C, w) == w, ("codeword is own root", C, w))
        res.record(len(C) <= len(trunks), ("trunk injection", C))
    return res


def check_redundancy_lemma(samples: int = 500, n_max: int = 5, seed: int = DEFAULT_SEED) -> CheckResult:
    """Root-based redundancy test against search over every ``sigma`` avoiding ``i``."""
    rng = np.random.default_rng(seed)
    res = CheckResult("redundancy lemma")
    for _ in range(samples):
        n = int(rng.integers(1, n_max + 1))
        C = random_code(rng, n)
        for i in range(n):
            ti = trunk(C, 1 << i)
            brute = bool(ti) and any(trunk(C, s) == ti for s in _subsets(full_mask(n) & ~(1 << i)))
            status, witness = neuron_status(C, i)
            res.record(brute == (status is NeuronStatus.REDUNDANT), (C, i))
            if witness is not None:
                res.record(trunk(C, witness) == ti and not (witness >> i) & 1, (C, i, "witness"))
    return res


def check_reduction(samples: int = 300, n_max: int = 5, seed: int = DEFAULT_SEED) -> CheckResult:
    rng = np.random.default_rng(seed)
    res = CheckResult("reduction")
    for _ in range(samples):
        C = random_code(rng, int(rng.integers(0, n_max + 1)))
        red = reduce(C)
        res.record(is_reduced(red.code), ("not reduced", C))
        again = reduce(red.code)
        res.record(again.code == red.code and again.kept == list(range(red.code.n)), ("idempotent", C))
        rows = bool_mul(C.matrix(), red.projection)
        res.record(Code.from_matrix(rows) == red.code, ("projection", C))
    return res


def check_canonical_label(samples: int = 300, n_max: int = 5, seed: int = DEFAULT_SEED) -> CheckResult:
    """Label is unchanged by permuting columns and by adding duplicate or product columns."""
    rng = np.random.default_rng(seed)
    res = CheckResult("canonical label")
    for _ in range(samples):
        n = int(rng.integers(1, n_max + 1))
        C = random_code(rng, n)
        key = canonical_key(C)
        perm = [int(x) for x in rng.permutation(n)]
        res.record(canonical_key(project(C, perm)) == key, ("permutation", C, perm))
        js = [int(x) for x in rng.choice(n, size=int(rng.integers(1, n + 1)), replace=False)]
        extended = Code(
            n + 1,
            frozenset(w | (int(all((w >> j) & 1 for j in js)) << n) for w in C.words),
        )
        res.record(canonical_key(extended) == key, ("product column", C, js))
    return res


# -- ideal -----------------------------------------------------------------


def check_completions(samples: int = 1000, n_max: int = 6, seed: int = DEFAULT_SEED) -> CheckResult:
    """Filtered canonical forms reproduce the closure-based completions."""
    rng = np.random.default_rng(seed)
    res = CheckResult("completions via canonical form")
    for _ in range(samples):
        n = int(rng.integers(1, n_max + 1))
        C = random_code(rng, n)
        cf = canonical_form(C)
        ok, _ = is_canonical(cf.elements)
        res.record(ok, ("canonical", C))
        inter = code_of_cf(intersection_completion_cf(cf), n)
        res.record(inter == closure_intersection(C), ("intersection", C))
        union = code_of_cf(union_completion_cf(cf), n)
        res.record(union == closure_union(C), ("union", C))
        res.record(code_of_cf(cf, n) == C, ("round trip", C))
        linear_tau = all(popcount(p.tau) <= 1 for p in cf)
        linear_sigma = all(popcount(p.sigma) <= 1 for p in cf)
        res.record(linear_tau == is_intersection_complete(C), ("intersection generators", C))
        res.record(linear_sigma == is_union_complete(C), ("union generators", C))
        roots = {root(T, n) for T in enumerate_trunks(C)}
        res.record(roots == set(closure_intersection(C).words), ("roots of trunks", C))
    return res


def check_cf_completeness(samples: int = 200, n_max: int = 5, seed: int = DEFAULT_SEED) -> CheckResult:
    """Every vanishing pseudomonomial is divisible by some canonical-form element."""
    rng = np.random.default_rng(seed)
    res = CheckResult("canonical form completeness")
    for _ in range(samples):
        n = int(rng.integers(1, n_max + 1))
        C = random_code(rng, n)
        cf = canonical_form(C)
        for p in cf:
            res.record(vanishes(p, C), ("element does not vanish", C, p))
        for p in all_pseudomonomials(n):
            if vanishes(p, C):
                res.record(any(q.divides(p) for q in cf), ("not covered", C, p))
    return res


# -- galois ----------------------------------------------------------------


def _galois_tables(pair: GaloisPair):
    F = [pair.lower_mask(a) for a in range(1 << pair.r)]
    G = [pair.upper_mask(b) for b in range(1 << pair.n)]
    return F, G


def _check_one_H(res: CheckResult, H: np.ndarray):
    pair = GaloisPair(H)
    r, n = H.shape
    F, G = _galois_tables(pair)
    a = np.arange(1 << r)
    b = np.arange(1 << n)
    Fa = np.array(F)
    Gb = np.array(G)
    below = (Fa[:, None] & ~b[None, :]) == 0  # F(a) <= b
    above = (a[:, None] & ~Gb[None, :]) == 0  # a <= G(b)
    res.record(bool(np.array_equal(below, above)), ("adjunction", H.tolist()))
    res.record(bool(np.array_equal(Fa[Gb[Fa]], Fa)), ("FGF", H.tolist()))
    res.record(bool(np.array_equal(Gb[Fa[Gb]], Gb)), ("GFG", H.tolist()))
    # residual maximality: G(b) is feasible, and every feasible a lies below it
    feasible = np.all((Fa[Gb] & ~b) == 0)
    res.record(bool(feasible and np.all(above[below])), ("residual maximality", H.tolist()))
    monotone = np.all((Fa[:, None] & ~Fa[a[:, None] | a[None, :]]) == 0) and np.all(
        (Gb[:, None] & ~Gb[b[:, None] | b[None, :]]) == 0
    )
    res.record(bool(monotone), ("monotone", H.tolist()))


def check_galois(exhaustive_max: int = 4, samples: int = 200, random_max: int = 6, seed: int = DEFAULT_SEED) -> CheckResult:
    """Adjunction, triple-composition fixed points and residual maximality.

    Every ``H`` with ``r, n <= exhaustive_max`` is checked, then ``samples``
    random ``H`` with ``r, n <= random_max``.
    """
    rng = np.random.default_rng(seed)
    res = CheckResult("galois laws")
    for r in range(1, exhaustive_max + 1):
        for n in range(1, exhaustive_max + 1):
            for bits in range(1 << (r * n)):
                H = np.array([(bits >> k) & 1 for k in range(r * n)], dtype=np.uint8).reshape(r, n)
                _check_one_H(res, H)
    for _ in range(samples):
        r = int(rng.integers(1, random_max + 1))
        n = int(rng.integers(1, random_max + 1))
        H = random_matrix(rng, r, n)
        _check_one_H(res, H)
        # array formulas agree with the bitmask tables
        pair = GaloisPair(H)
        for y in range(1 << n):
            x = np.array([(y >> j) & 1 for j in range(n)], dtype=np.uint8)
            g1, g2 = G_H(x, H), G_H_complement(x, H)
            res.record(bool(np.array_equal(g1, g2)), ("two formulas for G", H.tolist(), y))
            res.record(sum(int(v) << j for j, v in enumerate(g1)) == pair.upper_mask(y), ("G mask", H.tolist()))
        for a in range(1 << r):
            x = np.array([(a >> j) & 1 for j in range(r)], dtype=np.uint8)
            f = F_H(x, H)
            res.record(sum(int(v) << j for j, v in enumerate(f)) == pair.lower_mask(a), ("F mask", H.tolist()))
        # matrix residual: XA <= B and any X' with X'A <= B lies below X
        m = int(rng.integers(1, 5))
        B = random_matrix(rng, m, n)
        X = residual(B, H)
        res.record(bool(np.all(bool_mul(X, H) <= B)), ("residual feasible", H.tolist()))
        for _ in range(20):
            Xp = random_matrix(rng, m, r)
            if np.all(bool_mul(Xp, H) <= B):
                res.record(bool(np.all(Xp <= X)), ("residual maximal", H.tolist()))
    return res


def check_factor_solvability(samples: int = 200, max_dim: int = 3, seed: int = DEFAULT_SEED) -> CheckResult:
    """``C = VH`` solvable (by brute force over ``V``) iff ``V = C:H`` solves it."""
    rng = np.random.default_rng(seed)
    res = CheckResult("solvability of C = VH")
    for _ in range(samples):
        m, r, n = (int(rng.integers(1, max_dim + 1)) for _ in range(3))
        H = random_matrix(rng, r, n)
        if rng.random() < 0.5:
            C = bool_mul(random_matrix(rng, m, r), H)
        else:
            C = random_matrix(rng, m, n)
        exists = False
        for bits in range(1 << (m * r)):
            V = np.array([(bits >> k) & 1 for k in range(m * r)], dtype=np.uint8).reshape(m, r)
            if np.array_equal(bool_mul(V, H), C):
                exists = True
                break
        via_residual = np.array_equal(bool_mul(residual(C, H), H), C)
        res.record(exists == via_residual, (C.tolist(), H.tolist()))
    return res


# -- morphisms -------------------------------------------------------------


def _random_rep(rng, C: Code, r_max: int = 4) -> MorphismRep:
    r = int(rng.integers(1, r_max + 1))
    taus = [int(rng.integers(1 << C.n)) if rng.random() < 0.6 else 1 << int(rng.integers(C.n)) for _ in range(r)]
    return drop_trivial_image_neurons(C, MorphismRep(C.n, tuple(taus)))


def check_morphisms(samples: int = 300, n_max: int = 5, seed: int = DEFAULT_SEED) -> CheckResult:
    rng = np.random.default_rng(seed)
    res = CheckResult("morphisms")
    for _ in range(samples):
        n = int(rng.integers(1, n_max + 1))
        C = random_code(rng, n)
        f = _random_rep(rng, C)
        if f.r == 0:
            continue
        app = apply(f, C)
        canon = canonical_representative(C, f)
        res.record(apply(canon, C).word_map == app.word_map, ("canonical rep changes map", C, f))
        res.record(canonical_representative(C, canon) == canon, ("canonical rep not idempotent", C))
        # brute-force: the canonical tau_j is the largest set generating the same trunk
        for t, ct in zip(f.taus, canon.taus):
            T = trunk(C, t)
            gens = [s for s in range(1 << n) if trunk(C, s) == T]
            res.record(all(s & ct == s for s in gens) and ct in gens, ("not the maximal generator", C))
        # distinct tuples give distinct maps on the whole cube
        other = MorphismRep(n, tuple(int(rng.integers(1 << n)) for _ in range(f.r)))
        if other.taus != canon.taus:
            differ = any(other.evaluate(w) != canon.evaluate(w) for w in range(1 << n))
            res.record(differ, ("lift collision", canon, other))
        if is_bmf(C, f):
            res.record(len(app.image) == len(C), ("BMF not bijective", C, f))
            if trunk_count(app.image) != trunk_count(C):
                res.record(defect(app.image) < defect(C), ("BMF did not lower defect", C, f))
            if not is_reduced(C):
                g = bmf_reduce_source(C, f)
                red = reduce(C).code
                res.record(is_bmf(red, g), ("reduce source", C, f))
                res.record(canonical_key(apply(g, red).image) == canonical_key(app.image), ("reduce source image", C))
            else:
                try:
                    g = bmf_reduce_target(C, f)
                except DomainError:
                    found = bmf_onto(C, reduce(app.image).code)
                    if found is not NotImplemented:
                        res.record(found is None, ("reduce target gave up but a BMF exists", C, f))
                else:
                    img = apply(g, C).image
                    res.record(is_bmf(C, g) and is_reduced(img), ("reduce target", C, f))
                    res.record(canonical_key(img) == canonical_key(app.image), ("reduce target image", C))
        # composition
        D = app.image
        g = _random_rep(rng, D)
        if g.r == 0:
            continue
        gf = compose(f, g, C)
        res.record(
            all(gf.evaluate(w) == g.evaluate(f.evaluate(w)) for w in C.words),
            ("composition", C, f, g),
        )
        E = apply(g, D).image
        h = _random_rep(rng, E)
        if h.r:
            left = compose(compose(f, g), h)
            right = compose(f, compose(g, h))
            res.record(left == right, ("associativity", C))
    return res


def bmf_onto(C: Code, D: Code, max_tuples: int = 20_000):
    """A BMF representative from ``C`` onto a code isomorphic to reduced ``D``, or ``None``.

    Brute force over tuples of distinct trunk roots (canonical entries are
    roots, and a reduced image has no repeated column).  Returns
    ``NotImplemented`` when there are more than ``max_tuples`` tuples.
    """
    roots = sorted({root(T, C.n) for T in enumerate_trunks(C)})
    k = D.n
    if math.comb(len(roots), k) > max_tuples:
        return NotImplemented
    target = canonical_key(D)
    for combo in itertools.combinations(roots, k):
        f = MorphismRep(C.n, combo)
        if canonical_key(apply(f, C).image) == target and is_bmf(C, f):
            return f
    return None


# -- covering maps ---------------------------------------------------------


def _brute_collisions(step) -> set:
    C, i, n = step.source, step.neuron, step.source.n
    ti = trunk(C, 1 << i)

    def f(c):
        v = c & ~(1 << i)
        if (c >> i) & 1:
            for j in range(n):
                if (c >> j) & 1 and trunk(C, (1 << i) | (1 << j)) != ti:
                    v |= 1 << (j + n)
        return v

    words = sorted(C.words)
    return {(a, b) for a, b in itertools.combinations(words, 2) if f(a) == f(b)}


def check_covering_step(res: CheckResult, C: Code, i: int):
    """All covering-map facts for one reduced code and neuron."""
    step = covering_map(C, i)
    free = relative_root(C, 1 << i) not in C.words
    res.record(step.is_bmf_step == free, ("BMF iff free", C, i))
    res.record(step.t_image == step.t_source - 1, ("t drops by one", C, i))
    res.record(step.defect_drop in (0, 1), ("defect drop", C, i))
    res.record(defect(C) - defect(step.image) == step.defect_drop, ("defect bookkeeping", C, i))
    brute = _brute_collisions(step)
    col = collision_check(C, i)
    res.record(brute == ({col} if col else set()), ("collision", C, i))
    for a, b in brute:
        res.record(a ^ b == 1 << i, ("weak collision", C, i))
    res.record((step.defect_drop == 0) == (col is not None), ("defect drop vs collision", C, i))
    # squeeze: sigma - i <= f^T f(sigma) <= sigma, on the raw image
    raw = step.raw_rep
    back = {}
    for w in C.words:
        d = raw.evaluate(w)
        u = 0
        for j in bits_of(d):
            u |= raw.taus[j]
        back[w] = u
        res.record(w & ~(1 << i) & ~u == 0 and u & ~w == 0, ("squeeze", C, i, w))
    res.record(relative_root(C, 1 << i) not in back.values(), ("root in kernel image", C, i))
    res.record(is_bmf(C, drop_trivial_image_neurons(C, raw)) == step.is_bmf_step, ("raw vs reduced BMF", C, i))
    return step


def check_covering(codes, name: str = "covering maps") -> tuple:
    """Run :func:`check_covering_step` on every neuron of every code; also return the steps."""
    res = CheckResult(name)
    steps = []
    for C in codes:
        for i in range(C.n):
            steps.append(check_covering_step(res, C, i))
    return res, steps


def check_bigrading(steps, name: str = "bigrading") -> CheckResult:
    res = CheckResult(name)
    for s in steps:
        t0, t1 = s.t_source, s.t_image
        d0, d1 = t0 - len(s.source), t1 - len(s.image)
        res.record(t1 == t0 - 1 and d0 - d1 in (0, 1), (str(s.source), s.neuron))
    return res


def check_second_galois(n_max: int = 4, samples: int = 100, seed: int = DEFAULT_SEED) -> CheckResult:
    """``S <= tk(sigma)`` iff ``sigma <= root(S)``; trunk/root are inverse iff defect is zero.

    The connection is order-reversing on families of codewords.  The
    covariant reading ``tk(sigma) <= S`` fails already for ``{∅, 1}``.
    """
    rng = np.random.default_rng(seed)
    res = CheckResult("trunk/root galois connection")
    codes = [C for n in range(1, min(n_max, 3) + 1) for C in all_codes(n) if C.words]
    codes += [random_code(rng, n_max) for _ in range(samples)]
    for C in codes:
        n = C.n
        words = sorted(C.words)
        if len(words) <= 8:
            families = [frozenset(s) for k in range(len(words) + 1) for s in itertools.combinations(words, k)]
        else:
            families = [frozenset(w for w in words if rng.random() < 0.5) for _ in range(64)]
        for S in families:
            rS = root(S, n)
            for s in range(1 << n):
                res.record((S <= trunk(C, s)) == (s & rS == s), (C, s))
        mutual = all(root(T, n) in C.words for T in enumerate_trunks(C))
        res.record(mutual == (defect(C) == 0), ("inverse iff defect zero", C))
    return res


# -- rank ------------------------------------------------------------------


def exhaustive_brank(M) -> int:
    """Boolean rank by trying every set of ``r`` distinct nonzero rows for ``H``.

    ``C = VH`` is solvable iff ``V = C:H`` solves it, so only ``H`` is searched.
    """
    M = np.asarray(M, dtype=np.uint8)
    m, n = M.shape
    if not M.any():
        return 0
    rows = [np.array([(v >> j) & 1 for j in range(n)], dtype=np.uint8) for v in range(1, 1 << n)]
    for r in range(1, min(m, n) + 1):
        for combo in itertools.combinations(rows, r):
            H = np.array(combo)
            if np.array_equal(bool_mul(residual(M, H), H), M):
                return r
    raise AssertionError("no factorization up to min(m, n)")


def check_exact_rank(samples: int = 300, max_dim: int = 4, exhaustive_dim: int = 3, seed: int = DEFAULT_SEED) -> CheckResult:
    """Block-cover solver against exhaustive ``H`` search, with certificate checks."""
    rng = np.random.default_rng(seed)
    res = CheckResult("exact rank vs exhaustive search")

    def one(M):
        r, V, H = brank_exact(M)
        res.record(r == exhaustive_brank(M), ("rank", M.tolist()))
        res.record(V.shape[1] == r and np.array_equal(bool_mul(V, H), M), ("certificate", M.tolist()))
        # H-maximal normalization keeps the product
        res.record(np.array_equal(bool_mul(residual(M, H), H), M), ("normalization", M.tolist()))

    for m in range(1, exhaustive_dim + 1):
        for n in range(1, exhaustive_dim + 1):
            for bits in range(1 << (m * n)):
                one(np.array([(bits >> k) & 1 for k in range(m * n)], dtype=np.uint8).reshape(m, n))
    for _ in range(samples):
        one(random_matrix(rng, int(rng.integers(1, max_dim + 1)), int(rng.integers(1, max_dim + 1))))
    return res


def check_rank_bounds(samples: int = 500, max_dim: int = 5, seed: int = DEFAULT_SEED) -> CheckResult:
    """``mrank <= brank``, reduction never raises rank, chain bound is an upper bound."""
    rng = np.random.default_rng(seed)
    res = CheckResult("rank bounds")
    for _ in range(samples):
        M = random_matrix(rng, int(rng.integers(1, max_dim + 1)), int(rng.integers(1, max_dim + 1)))
        C = Code.from_matrix(M)
        b = brank_exact(M)[0]
        res.record(mrank_exact(C) <= b, ("mrank", M.tolist()))
        res.record(brank_exact(reduce(C).code.matrix())[0] <= b, ("reduced", M.tolist()))
        chain = brank_chain(M)
        res.record(chain.bound >= b and np.array_equal(bool_mul(chain.V, chain.H), M), ("chain", M.tolist()))
    return res


def intersection_complete_samples(rng, count: int, n_max: int = 5) -> list:
    """Random reduced intersection-complete codes with at most ``n_max`` neurons."""
    out = []
    while len(out) < count:
        n = int(rng.integers(1, n_max + 1))
        C = reduce(closure_intersection(random_code(rng, n))).code
        if C.n >= 1:
            out.append(C)
    return out


def check_intersection_complete_rank(samples: int = 100, n_max: int = 5, seed: int = DEFAULT_SEED) -> CheckResult:
    rng = np.random.default_rng(seed)
    res = CheckResult("intersection-complete full rank")
    for C in intersection_complete_samples(rng, samples, n_max):
        res.record(brank_exact(C.matrix())[0] == min(len(C), C.n), C)
    return res


def run_all(seed: int = DEFAULT_SEED, quick: bool = False) -> list:
    """The suites behind ``codemorph verify``."""
    s = 0.2 if quick else 1.0
    k = lambda x: max(1, int(x * s))  # noqa: E731
    rng = np.random.default_rng(seed)
    sampled = [random_reduced_code(rng, int(rng.integers(4, 6))) for _ in range(k(500))]
    cov_small, steps_small = check_covering(all_reduced_codes(3), "covering maps, all codes n <= 3")
    cov_big, steps_big = check_covering(sampled, "covering maps, sampled n = 4..5")
    return [
        check_trunk_lemmas(k(1000), 6, seed),
        check_redundancy_lemma(k(500), 5, seed),
        check_reduction(k(300), 5, seed),
        check_canonical_label(k(300), 5, seed),
        check_completions(k(1000), 6, seed),
        check_cf_completeness(k(200), 5, seed),
        check_galois(3 if quick else 4, k(200), 6, seed),
        check_factor_solvability(k(200), 3, seed),
        check_morphisms(k(300), 5, seed),
        cov_small,
        cov_big,
        check_bigrading(steps_small + steps_big),
        check_second_galois(4, k(100), seed),
        check_exact_rank(k(300), 4, 3, seed),
        check_rank_bounds(k(500), 5, seed),
        check_intersection_complete_rank(k(100), 5, seed),
    ]
