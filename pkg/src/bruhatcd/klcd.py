"""
From the complete cd-index to Kazhdan-Lusztig polynomials.

The bridge has several independent routes to the antisymmetric part
``q^(-l/2) P(q) - q^(l/2) P(1/q)``: the recursion for ``P``, the
quasisymmetric map ``K`` applied to ``F-tilde``, the sum ``sum [w] Xi_w``
with ``Xi_w`` in closed form, and a sum over the ``b_beta`` weighted by
lattice-path ``Upsilon``.  ``antisymmetric_part`` computes all four and
refuses to answer if they disagree.

>>> str(ballot(4)), str(ballot(4).negate_var())
('2q^2+3q+1', '2q^2-3q+1')
>>> catalan(2), catalan(1.5)
(2, 0)
>>> str(xi_w(""))
'-t+t^-1'
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Optional

from .brupaths import PathStats, b_stats
from .coxeter import LEX, CoxeterSystem
from .klcore import kl_polynomial, r_tilde
from .polyalg import (
    HalfLaurent,
    IntPoly,
    QSymVec,
    c_runs,
    cd_degree,
    cd_words,
    d_count,
    head,
    mask_to_composition,
    refinements,
    reverse_composition,
    theta_in_L,
    truncate_D,
)
from .qsym import admissible_degrees, complete_cd_index, f_tilde

__all__ = [
    "AVector",
    "RouteMismatch",
    "catalan",
    "ballot",
    "psi_alpha",
    "upsilon",
    "upsilon_lattice",
    "K_map",
    "xi_w",
    "xi_via_theta",
    "word_catalan",
    "is_even_word",
    "antisymmetric_routes",
    "antisymmetric_part",
    "a_vector",
    "kl_from_cd",
    "p_from_a",
    "a_from_p",
    "a_last",
    "p1_two_ways",
    "g_dual",
    "chaininject_holds",
    "conjecture_record",
    "conjecture_scan",
]


class RouteMismatch(ArithmeticError):
    """Two computations of the same quantity disagree."""

    def __init__(self, identity: str, detail: str):
        super().__init__(f"{identity}: {detail}")
        self.identity = identity


# --- Catalan and ballot numbers -------------------------------------------


def catalan(i) -> int:
    """``C_i``; zero when ``i`` is not a natural number."""
    if isinstance(i, Fraction):
        if i.denominator != 1:
            return 0
        i = int(i)
    if isinstance(i, float):
        if not i.is_integer():
            return 0
        i = int(i)
    if i < 0:
        return 0
    return comb(2 * i + 1, i) // (2 * i + 1)


@lru_cache(maxsize=None)
def ballot(k: int) -> IntPoly:
    """``B_k(q) = sum_i (k+1-2i)/(k+1) * binom(k+1, i) q^i``."""
    if k < 0:
        raise ValueError("ballot index must be nonnegative")
    coeffs = []
    for i in range(k // 2 + 1):
        num = (k + 1 - 2 * i) * comb(k + 1, i)
        assert num % (k + 1) == 0
        coeffs.append(num // (k + 1))
    return IntPoly(coeffs)


# --- Psi and Upsilon -------------------------------------------------------

_QM1 = IntPoly([-1, 1])


@lru_cache(maxsize=None)
def psi_alpha(alpha: tuple[int, ...]) -> IntPoly:
    alpha = tuple(alpha)
    if not alpha:
        raise ValueError("psi is undefined on the empty composition")
    if len(alpha) == 1:
        return _QM1 ** alpha[0]
    rest = alpha[1:]
    return _QM1 ** alpha[0] * truncate_D(psi_alpha(rest), (sum(rest) - 1) // 2)


@lru_cache(maxsize=None)
def upsilon(beta: tuple[int, ...]) -> IntPoly:
    """Signed sum of ``Psi_alpha`` over the refinements ``alpha`` of ``beta``."""
    beta = tuple(beta)
    if not beta:
        raise ValueError("upsilon is undefined on the empty composition")
    out = IntPoly()
    for alpha in refinements(beta):
        term = psi_alpha(alpha)
        out = out - term if len(alpha) % 2 else out + term
    return out


@lru_cache(maxsize=None)
def _lattice_table(n: int) -> dict[tuple[int, ...], IntPoly]:
    # one pass over all 2^n paths on [0, n], bucketed by co(N(path))
    buckets: dict[tuple[int, ...], dict[int, int]] = {}
    for steps in range(1 << n):
        h, neg, ups = 0, 0, 0
        for i in range(n):
            if steps >> i & 1:
                h += 1
                ups += 1
            else:
                h -= 1
            if i < n - 1 and h < 0:
                neg |= 1 << i
        key = mask_to_composition(neg, n)
        b = buckets.setdefault(key, {})
        b[ups] = b.get(ups, 0) + (-1 if ups % 2 else 1)
    return {k: IntPoly(v) for k, v in buckets.items()}


def upsilon_lattice(alpha: tuple[int, ...]) -> IntPoly:
    """``Upsilon_alpha`` as a signed count of lattice paths whose negative set
    has composition ``alpha`` reversed."""
    alpha = tuple(alpha)
    if not alpha:
        raise ValueError("upsilon is undefined on the empty composition")
    n = sum(alpha)
    p = _lattice_table(n).get(reverse_composition(alpha), IntPoly())
    return -p if (n - len(alpha)) % 2 else p


# --- the K map and Xi ------------------------------------------------------


def K_map(v: QSymVec) -> HalfLaurent:
    """``L_alpha -> t^(-|alpha|) Upsilon_alpha(t^2)``, extended linearly."""
    if v.basis != "L":
        raise ValueError("K_map expects an L-basis vector")
    out = HalfLaurent()
    for alpha, c in v.coeffs.items():
        out = out + HalfLaurent.from_intpoly(upsilon(alpha), shift=-sum(alpha)) * c
    return out


def is_even_word(w: str) -> bool:
    """Every c-run after the first d has even length."""
    return all(r % 2 == 0 for r in c_runs(w)[1:])


def word_catalan(w: str) -> int:
    """``prod_j C_(n_j/2)`` over the c-runs after the head."""
    out = 1
    for r in c_runs(w)[1:]:
        out *= catalan(Fraction(r, 2))
    return out


def _ballot_antisym(n0: int) -> HalfLaurent:
    B = ballot(n0).negate_var()
    return HalfLaurent.from_intpoly(B, shift=-(n0 + 1)) - HalfLaurent.from_intpoly(
        B, inverse=True, shift=n0 + 1
    )


def xi_w(w: str) -> HalfLaurent:
    """Closed form of ``K(Theta_w)``."""
    cw = word_catalan(w)
    if not cw:
        return HalfLaurent()
    n0 = head(w)
    e = d_count(w) + (cd_degree(w) - n0) // 2
    return _ballot_antisym(n0) * (-cw if e % 2 else cw)


def xi_via_theta(w: str) -> HalfLaurent:
    return K_map(theta_in_L(w))


# --- the antisymmetric part, four ways ------------------------------------


def _antisym_from_P(P: IntPoly, l: int) -> HalfLaurent:
    return HalfLaurent.from_intpoly(P, shift=-l) - HalfLaurent.from_intpoly(P, inverse=True, shift=l)


def _lattice_route(stats: PathStats, l: int) -> HalfLaurent:
    # P - q^l P(1/q) = sum_beta q^((l-|beta|)/2) Upsilon_beta b_beta, in Z[q]
    total = IntPoly()
    for beta, c in stats.by_composition.items():
        total = total + upsilon_lattice(beta).shift((l - sum(beta)) // 2) * c
    return HalfLaurent.from_intpoly(total, shift=-l)


def antisymmetric_routes(W: CoxeterSystem, u, v, ordering=LEX) -> dict[str, HalfLaurent]:
    l = W.length(v) - W.length(u)
    stats = b_stats(W, u, v, ordering)
    psi = complete_cd_index(W, u, v, ordering)
    xi_sum = HalfLaurent()
    for w, c in psi.poly.items():
        xi_sum = xi_sum + xi_w(w) * c
    return {
        "recursion": _antisym_from_P(kl_polynomial(W, u, v), l),
        "cd-xi": xi_sum,
        "K-map": K_map(f_tilde(W, u, v, ordering)),
        "upsilon-b": _lattice_route(stats, l),
    }


def antisymmetric_part(W: CoxeterSystem, u, v, ordering=LEX) -> HalfLaurent:
    """``q^(-l/2) P - q^(l/2) P(1/q)`` after checking all routes agree.

    >>> from bruhatcd.coxeter import CoxeterSystem
    >>> W = CoxeterSystem.parse_name("S3")
    >>> str(antisymmetric_part(W, W.parse("123"), W.parse("321")))
    '-t^3+t^-3'
    """
    if u == v:
        raise ValueError("antisymmetric part needs u < v")
    routes = antisymmetric_routes(W, u, v, ordering)
    ref = routes["recursion"]
    for name, val in routes.items():
        if val != ref:
            raise RouteMismatch(
                "sum [w] Xi_w" if name == "cd-xi" else name,
                f"{name} gives {val}, recursion gives {ref} on [{W.format(u)}, {W.format(v)}]",
            )
    return ref


# --- the a-vector -----------------------------------------------------------


@dataclass(frozen=True)
class AVector:
    """Coordinates of ``P`` in the basis ``q^i B_(n-2i)(-q)``."""

    entries: tuple[int, ...]
    n: int

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def min(self) -> Optional[int]:
        return min(self.entries) if self.entries else None

    def kl(self) -> IntPoly:
        if self.n < 0:
            return IntPoly(1)
        out = IntPoly()
        for i, a in enumerate(self.entries):
            out = out + ballot(self.n - 2 * i).negate_var().shift(i) * a
        return out


def _a_from_words(poly: dict[str, int], n: int, top_only: bool) -> AVector:
    a = [0] * (n // 2 + 1) if n >= 0 else []
    for w, c in poly.items():
        if not c or (top_only and cd_degree(w) != n):
            continue
        h = head(w)
        if (n - h) % 2:
            continue
        cw = word_catalan(w)
        if not cw:
            continue
        e = d_count(w) + (cd_degree(w) - h) // 2
        a[(n - h) // 2] += (-1 if e % 2 else 1) * cw * c
    return AVector(tuple(a), n)


def a_vector(poly: dict[str, int], l: int) -> AVector:
    """
    ``a_i`` is the signed Catalan-weighted sum of the coefficients of the even
    words with head ``n - 2i`` (``n = l - 1``).
    """
    return _a_from_words(poly, l - 1, top_only=False)


def kl_from_cd(poly: dict[str, int], l: int) -> IntPoly:
    return a_vector(poly, l).kl()


def g_dual(poly: dict[str, int], l: int) -> IntPoly:
    """The ballot expansion fed only the degree ``l - 1`` coefficients."""
    return _a_from_words(poly, l - 1, top_only=True).kl()


def p_from_a(a: AVector) -> IntPoly:
    n = a.n
    out = []
    for j in range(len(a)):
        s = Fraction(0)
        for i in range(j + 1):
            term = Fraction(n + 1 - 2 * j, n + 1 - 2 * i) * comb(n + 1 - 2 * i, j - i) * a[i]
            s += -term if (j - i) % 2 else term
        assert s.denominator == 1, f"non-integral coefficient {s}"
        out.append(int(s))
    return IntPoly(out)


def a_from_p(p: IntPoly, n: int) -> AVector:
    if p.degree > n // 2:
        raise ValueError(f"degree {p.degree} exceeds {n // 2}")
    return AVector(
        tuple(sum(comb(n - j - i, n - 2 * j) * p[i] for i in range(j + 1)) for j in range(n // 2 + 1)),
        n,
    )


def a_last(P: IntPoly, l: int) -> int:
    """The last ``a``: ``P(1)`` for odd ``l``; the derivative at 1 of
    ``q^(l/2) P(1/q)`` for even ``l``."""
    if l % 2:
        return P(1)
    return sum(c * (l // 2 - i) for i, c in P.items())


def p1_two_ways(W: CoxeterSystem, u, v, ordering=LEX) -> tuple[int, int]:
    """``[q]P`` from the cd-index and from the chain counts ``c_alpha``."""
    l = W.length(v) - W.length(u)
    if l < 2:
        raise ValueError("need l(u, v) >= 2")
    n = l - 1
    psi = complete_cd_index(W, u, v, ordering)
    if n >= 2:
        via_cd = psi["c" * (n - 2) + "d"] + psi["c" * (n - 2)] - (n - 1) * psi["c" * n]
    else:
        via_cd = -(n - 1) * psi["c" * n]
    stats = b_stats(W, u, v, ordering)
    c_prev = stats.c((n - 1,)) if n >= 2 else 0
    via_c = stats.c((n, 1)) + c_prev - (n + 1)
    return via_cd, via_c


def chaininject_holds(W: CoxeterSystem, u, v, ordering=LEX) -> bool:
    """``2^(k-1) [t^k] Rt <= |B_k|`` for every ``k >= 1`` and
    ``2^n [c^n] <= c_[n]`` for each admissible ``n``."""
    stats = b_stats(W, u, v, ordering)
    totals = stats.totals()
    for k, coef in r_tilde(W, u, v).items():
        if k >= 1 and coef * 2 ** (k - 1) > totals.get(k, 0):
            return False
    psi = complete_cd_index(W, u, v, ordering)
    l = W.length(v) - W.length(u)
    return all(2 ** n * psi["c" * n] <= totals.get(n + 1, 0) for n in admissible_degrees(l))


# --- conjecture scan -------------------------------------------------------


def conjecture_record(W: CoxeterSystem, u, v, ordering=LEX) -> dict:
    l = W.length(v) - W.length(u)
    psi = complete_cd_index(W, u, v, ordering)
    coeffs = [psi[w] for n in admissible_degrees(l) for w in cd_words(n)]
    a = a_vector(psi.poly, l)
    P = kl_polynomial(W, u, v)
    p1_ok = None
    if l >= 2:
        p1_ok = all(x == P[1] for x in p1_two_ways(W, u, v, ordering))
    return {
        "u": W.format(u),
        "v": W.format(v),
        "l": l,
        "cd_min": min(coeffs),
        "a_vector": list(a),
        "a_min": a.min,
        "chaininject_ok": chaininject_holds(W, u, v, ordering),
        "p1_check_ok": p1_ok,
    }


def conjecture_scan(records) -> dict:
    """Summary over records from :func:`conjecture_record`."""
    records = list(records)
    return {
        "summary": True,
        "intervals": len(records),
        "cd_violations": sum(r["cd_min"] < 0 for r in records),
        "a_violations": sum(r["a_min"] is not None and r["a_min"] < 0 for r in records),
        "chaininject_violations": sum(not r["chaininject_ok"] for r in records),
        "p1_failures": sum(r["p1_check_ok"] is False for r in records),
    }
