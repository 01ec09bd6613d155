"""
Cross-checks between independent computations, run interval by interval.

Each check takes ``(W, u, v)`` with ``u < v`` and returns ``(ok, detail)``.
Exceptions raised by a self-verifying routine count as failures of the
check that triggered them.  ``run_checks`` evaluates a list of checks over
many intervals, optionally in worker processes, and always reports in input
order.

>>> from bruhatcd.coxeter import CoxeterSystem
>>> W = CoxeterSystem.parse_name("S3")
>>> [r.ok for r in run_checks(W, W.comparable_pairs(), IDENTITY)]
[True, True, True, True, True, True, True, True, True, True, True, True, True]
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence

from . import klcd, qsym
from .brupaths import (
    _b2_split,
    c_from_b,
    c_via_chains,
    descent_set,
    flip2,
    increasing_paths,
    phi_injection,
    b_stats,
)
from .coxeter import LEX, REVLEX, CoxeterSystem, ReflectionOrdering
from .klcore import kl_condition_residual, kl_polynomial, r_polynomial, r_tilde, r_tilde_residual
from .polyalg import (
    QSymVec,
    all_compositions,
    cd_words,
    compositions,
    l_to_m,
    m_product,
    mask_to_composition,
)

__all__ = [
    "Check",
    "CheckReport",
    "IDENTITY",
    "FLIPS",
    "CONJECTURES",
    "run_checks",
    "interval_checks",
    "product_suite",
    "sample_pairs",
    "corpus",
]


@dataclass(frozen=True)
class Check:
    key: str
    title: str
    fn: Callable


@dataclass
class CheckReport:
    key: str
    title: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "ok" if self.ok else f"FAIL ({len(self.failures)})"
        return f"[{self.key}] {self.title}: {status} on {self.checked} intervals"


def _len(W, u, v) -> int:
    return W.length(v) - W.length(u)


# --- identity checks ---------------------------------------------------------


def _rtilde(W, u, v):
    res = r_tilde_residual(W, u, v)
    return not res, f"residual {res}"


def _kl_condition(W, u, v):
    res = kl_condition_residual(W, u, v)
    return not res, f"residual {res}"


def _antisym(W, u, v):
    klcd.antisymmetric_part(W, u, v)
    return True, ""


def _kl_from_cd(W, u, v):
    psi = qsym.complete_cd_index(W, u, v)
    got, want = klcd.kl_from_cd(psi.poly, _len(W, u, v)), kl_polynomial(W, u, v)
    return got == want, f"ballot expansion {got}, recursion {want}"


def _sparse_vs_k(W, u, v):
    stats = b_stats(W, u, v)
    for n in qsym.admissible_degrees(_len(W, u, v)):
        kv = qsym.k_vector(stats, n)
        for w in cd_words(n):
            a, b = qsym.cd_coefficient(w, stats), qsym.cd_from_k(w, kv)
            if a != b:
                return False, f"[{w}] sparse {a}, k-vector {b}"
    return True, ""


def _theta(W, u, v):
    psi = qsym.complete_cd_index(W, u, v, verify=False)
    ok = qsym.reconstruct(psi.poly) == qsym.f_tilde(W, u, v)
    return ok, "sum [w] Theta_w differs from F-tilde"


def _sums(W, u, v):
    psi = qsym.complete_cd_index(W, u, v)
    stats = b_stats(W, u, v)
    for n in qsym.admissible_degrees(_len(W, u, v)):
        weighted, plain = qsym.sum_identities(psi.poly, stats, n)
        if not (weighted and plain):
            return False, f"degree {n}: weighted {weighted}, plain {plain}"
    return True, ""


def _psi_rtilde(W, u, v):
    got = qsym.r_tilde_from_cd(qsym.complete_cd_index(W, u, v).poly)
    want = r_tilde(W, u, v)
    return got == want, f"q psi(q, 0) = {got}, R-tilde = {want}"


def _ab(W, u, v):
    psi = qsym.complete_cd_index(W, u, v)
    ok = qsym.ab_expansion(psi.poly) == qsym.path_weights(b_stats(W, u, v))
    return ok, "ab-expansion differs from path weights"


def _chains(W, u, v):
    stats = b_stats(W, u, v)
    for alpha in all_compositions(_len(W, u, v)):
        a, b = c_via_chains(W, u, v, alpha), c_from_b(stats, alpha)
        if a != b:
            return False, f"c{alpha}: chains {a}, paths {b}"
    return True, ""


def _ordering(W, u, v):
    a, b = b_stats(W, u, v, LEX), b_stats(W, u, v, REVLEX)
    return a.counts == b.counts, "lex and revlex statistics differ"


def _c_table(W, x, y) -> dict[tuple[int, ...], int]:
    # c_alpha(x, y) for all nonempty alpha, by a subset-sum over descent masks
    if x == y:
        return {}
    out = {}
    counts = b_stats(W, x, y).counts
    lengths = {k for k, _ in counts}
    for k in lengths:
        full = (1 << (k - 1)) - 1
        for allowed in range(full + 1):
            s = 0
            for (kk, m), c in counts.items():
                if kk == k and m & ~allowed == 0:
                    s += c
            if s:
                out[mask_to_composition(allowed, k)] = s
    return out


def _concat(W, u, v):
    l = _len(W, u, v)
    els = W.interval(u, v)
    lower = {w: _c_table(W, u, w) for w in els}
    upper = {w: _c_table(W, w, v) for w in els}
    whole = _c_table(W, u, v)
    for n in range(2, l + 1):
        for gamma in compositions(n):
            for cut in range(1, len(gamma)):
                a, b = gamma[:cut], gamma[cut:]
                s = sum(lower[w].get(a, 0) * upper[w].get(b, 0) for w in els)
                if s != whole.get(gamma, 0):
                    return False, f"c{gamma} = {whole.get(gamma, 0)}, convolution over {a}|{b} = {s}"
    return True, ""


def _flag(W, u, v):
    l = _len(W, u, v)
    psi = qsym.complete_cd_index(W, u, v)
    top = qsym.top_part(psi.poly, l - 1)
    ordinary = qsym.ordinary_cd_index(W, u, v)
    return top == ordinary, f"top degree {top}, flag-vector {ordinary}"


IDENTITY: list[Check] = [
    Check("a", "R-tilde substitution", _rtilde),
    Check("b", "KL defining relation", _kl_condition),
    Check("c", "antisymmetric part: recursion = sum [w] Xi_w = K(F-tilde) = Upsilon-b sum", _antisym),
    Check("d", "KL from the a-vector", _kl_from_cd),
    Check("e", "sparse extraction = k-vector extraction", _sparse_vs_k),
    Check("f", "sum [w] Theta_w = F-tilde", _theta),
    Check("g", "path-count sum identities", _sums),
    Check("h", "q psi(q, 0) = R-tilde", _psi_rtilde),
    Check("i", "ab-expansion = path-weight multiset", _ab),
    Check("j", "chain formula = path counts", _chains),
    Check("k", "reflection-ordering independence", _ordering),
    Check("l", "c concatenation identity", _concat),
    Check("m", "top degree = flag-vector cd-index", _flag),
]


# --- flips ---------------------------------------------------------------


def _flip_checks(W, u, v, ordering: ReflectionOrdering):
    rt = r_tilde(W, u, v)
    inc, dec = _b2_split(W, u, v, ordering)
    m = rt[2]
    if len(inc) != m or len(dec) != m:
        return False, f"B_2 split {len(inc)}/{len(dec)}, expected {m}/{m}"
    key = ordering.key
    for p in inc + dec:
        f = flip2(W, p, ordering)
        if flip2(W, f, ordering) != p:
            return False, "flip is not an involution"
        if descent_set(f.labels, ordering) == descent_set(p.labels, ordering):
            return False, "flip kept the descent set"
    for p in inc:
        f = flip2(W, p, ordering)
        if not (key(p.labels[0]) < key(f.labels[0]) and key(f.labels[1]) < key(p.labels[1])):
            return False, f"label inequalities fail for {[W.format(x) for x in p.vertices]}"
    totals = b_stats(W, u, v, ordering).totals()
    for k in range(1, _len(W, u, v) + 1):
        if not rt[k]:
            continue
        seen = set()
        for p in increasing_paths(W, u, v, k, ordering):
            for r in range(k):
                for S in combinations(range(1, k), r):
                    seen.add(phi_injection(W, p, S, ordering).vertices)
        expected = rt[k] * 2 ** (k - 1)
        if len(seen) != expected:
            return False, f"phi not injective at k={k}: {len(seen)} images of {expected}"
        if expected > totals.get(k, 0):
            return False, f"2^(k-1)[t^{k}]R-tilde = {expected} > |B_{k}| = {totals.get(k, 0)}"
    return True, ""


FLIPS: list[Check] = [
    Check("flip-lex", "flip involution, label inequalities, phi injectivity (lex)", lambda W, u, v: _flip_checks(W, u, v, LEX)),
    Check(
        "flip-revlex",
        "flip involution, label inequalities, phi injectivity (revlex)",
        lambda W, u, v: _flip_checks(W, u, v, REVLEX),
    ),
]


# --- conjectures -----------------------------------------------------------


def _cd_nonneg(W, u, v):
    neg = {w: c for w, c in qsym.complete_cd_index(W, u, v).poly.items() if c < 0}
    return not neg, f"negative coefficients {neg}"


def _a_nonneg(W, u, v):
    a = klcd.a_vector(qsym.complete_cd_index(W, u, v).poly, _len(W, u, v))
    return (a.min is None or a.min >= 0), f"a-vector {list(a)}"


def _chaininject(W, u, v):
    return klcd.chaininject_holds(W, u, v), "2^n [c^n] exceeds c_[n]"


def _p1(W, u, v):
    if _len(W, u, v) < 2:
        return True, ""
    got = klcd.p1_two_ways(W, u, v)
    want = kl_polynomial(W, u, v)[1]
    return got == (want, want), f"p1 formulas {got}, [q]P = {want}"


def _a_last(W, u, v):
    l = _len(W, u, v)
    P = kl_polynomial(W, u, v)
    a = klcd.a_vector(qsym.complete_cd_index(W, u, v).poly, l)
    rt = klcd.a_from_p(P, l - 1)
    ok = rt == a and klcd.p_from_a(a) == P and a[-1] == klcd.a_last(P, l)
    return ok, f"a-vector {list(a)}, from P {list(rt)}"


CONJECTURES: list[Check] = [
    Check("cd>=0", "cd-coefficients nonnegative", _cd_nonneg),
    Check("a>=0", "a-vector nonnegative", _a_nonneg),
    Check("chain", "2^n [c^n] <= c_[n]", _chaininject),
    Check("p1", "p1 from cd-index and from chain counts", _p1),
    Check("a<->p", "a/p conversions and last a-entry", _a_last),
]

ALL_SUITES = {"identity": IDENTITY, "flip": FLIPS, "conjecture": CONJECTURES}


# --- running --------------------------------------------------------------


def interval_checks(W: CoxeterSystem, u, v, checks: Sequence[Check]) -> list[tuple[bool, str]]:
    out = []
    for ch in checks:
        try:
            ok, detail = ch.fn(W, u, v)
        except ArithmeticError as e:
            ok, detail = False, str(e)
        out.append((bool(ok), "" if ok else detail))
    return out


def _suite_by_keys(keys: tuple[str, ...]) -> list[Check]:
    table = {c.key: c for suite in ALL_SUITES.values() for c in suite}
    return [table[k] for k in keys]


def _worker(args):
    degrees, u, v, keys = args
    return interval_checks(CoxeterSystem(degrees), u, v, _suite_by_keys(keys))


def run_checks(
    W: CoxeterSystem,
    pairs: Iterable[tuple],
    checks: Sequence[Check],
    jobs: int = 1,
) -> list[CheckReport]:
    pairs = list(pairs)
    reports = [CheckReport(c.key, c.title) for c in checks]
    if jobs > 1:
        keys = tuple(c.key for c in checks)
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_worker, [(W.degrees, u, v, keys) for u, v in pairs], chunksize=8))
    else:
        results = [interval_checks(W, u, v, checks) for u, v in pairs]
    for (u, v), res in zip(pairs, results):
        for rep, (ok, detail) in zip(reports, res):
            rep.checked += 1
            if not ok:
                rep.failures.append(f"[{W.format(u)}, {W.format(v)}] {detail}")
    return reports


def product_suite(W: CoxeterSystem) -> list[CheckReport]:
    """R, P and F-tilde of a product interval against the factor intervals."""
    factors = [CoxeterSystem((n,)) for n in W.degrees]
    reps = [
        CheckReport("prod-R", "R multiplicative over factors"),
        CheckReport("prod-P", "P multiplicative over factors"),
        CheckReport("prod-F", "F-tilde multiplicative over factors (M-basis quasi-shuffle)"),
    ]
    for u, v in W.comparable_pairs(strict=False):
        us, vs = W.factors(u), W.factors(v)
        R = P = None
        F = QSymVec("M", {(): 1})
        for Wi, ui, vi in zip(factors, us, vs):
            Ri, Pi = r_polynomial(Wi, ui, vi), kl_polynomial(Wi, ui, vi)
            R = Ri if R is None else R * Ri
            P = Pi if P is None else P * Pi
            F = m_product(F, l_to_m(qsym.f_tilde(Wi, ui, vi)))
        tag = f"[{W.format(u)}, {W.format(v)}]"
        for rep, ok in zip(
            reps,
            (
                R == r_polynomial(W, u, v),
                P == kl_polynomial(W, u, v),
                F == l_to_m(qsym.f_tilde(W, u, v)),
            ),
        ):
            rep.checked += 1
            if not ok:
                rep.failures.append(tag)
    return reps


def sample_pairs(W: CoxeterSystem, k: int, seed: int) -> list[tuple]:
    """``k`` comparable pairs ``u < v`` drawn with a seeded RNG, in canonical order."""
    pairs = W.comparable_pairs()
    if k >= len(pairs):
        return pairs
    idx = sorted(random.Random(seed).sample(range(len(pairs)), k))
    return [pairs[i] for i in idx]


def corpus(W: CoxeterSystem, sample: int | None = None, seed: int = 7) -> list[tuple]:
    return W.comparable_pairs() if sample is None else sample_pairs(W, sample, seed)
