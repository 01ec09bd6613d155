"""
The R-quasisymmetric function of a Bruhat interval and its complete
cd-index.

``f_tilde`` is read off the path statistics (``b_alpha`` in the L basis).
``complete_cd_index`` extracts every coefficient ``[w]`` from the sparse
``b_S`` with signed 0/1 weights and then checks that
``sum_w [w] Theta_w`` rebuilds ``f_tilde`` exactly.  The trivial interval
gets the zero cd-polynomial, while ``f_tilde(u, u) = 1``.

>>> from bruhatcd.coxeter import CoxeterSystem
>>> W = CoxeterSystem.parse_name("S3")
>>> complete_cd_index(W, W.identity, W.longest).poly
{'cc': 1, '': 1}
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .brupaths import PathStats, b_stats
from .coxeter import LEX, CoxeterSystem, ReflectionOrdering
from .klcore import IntervalKey
from .polyalg import (
    IntPoly,
    QSymVec,
    c_runs,
    cd_degree,
    cd_words,
    d_count,
    format_word,
    l_to_m,
    sparse_subsets,
    sorted_cd,
    theta_in_L,
)

__all__ = [
    "CompleteCdIndex",
    "ReconstructionError",
    "f_tilde",
    "admissible_degrees",
    "sparse_windows",
    "cd_coefficient",
    "complete_cd_index",
    "cd_poly_from_stats",
    "reconstruct",
    "k_vector",
    "cd_from_k",
    "ab_expand_word",
    "ab_expansion",
    "path_weights",
    "r_tilde_from_cd",
    "sum_identities",
    "flag_f_vector",
    "ab_index",
    "cd_from_ab",
    "ordinary_cd_index",
    "top_part",
    "f_tilde_m",
]


class ReconstructionError(ArithmeticError):
    """A cd-index failed to rebuild the quasisymmetric function it came from."""


@dataclass(frozen=True)
class CompleteCdIndex:
    poly: dict[str, int]
    interval: IntervalKey
    top_degree: int

    def __getitem__(self, w: str) -> int:
        return self.poly.get(w, 0)

    def to_json(self) -> dict:
        return {
            "interval": {"u": self.interval.u, "v": self.interval.v},
            "top_degree": self.top_degree,
            "coefficients": {format_word(w): c for w, c in sorted_cd(self.poly).items()},
        }


def f_tilde(W: CoxeterSystem, u, v, ordering: ReflectionOrdering = LEX) -> QSymVec:
    """L-basis vector with coefficient ``b_alpha(u, v)`` at ``L_alpha``."""
    if u == v:
        return QSymVec("L", {(): 1})
    return QSymVec("L", b_stats(W, u, v, ordering).by_composition)


def admissible_degrees(l: int) -> list[int]:
    """cd-degrees that may carry coefficients for an interval of length ``l``."""
    return list(range(l - 1, -1, -2))


def sparse_windows(w: str) -> tuple[list[int], list[range]]:
    """
    For ``w = c^n1 d c^n2 d ... c^nk d c^n0`` return ``m_1..m_k`` with
    ``m_0 = 1, m_j = m_{j-1} + n_j + 2`` and the windows
    ``A_j = [m_{j-1}, m_j - 2]``.
    """
    runs = c_runs(w)[:-1]
    ms, windows, prev = [], [], 1
    for nj in runs:
        m = prev + nj + 2
        ms.append(m)
        windows.append(range(prev, m - 1))
        prev = m
    return ms, windows


def cd_coefficient(w: str, stats: PathStats) -> int:
    """
    ``[w]`` as a signed sum of sparse ``b_S`` (paths of length ``deg w + 1``).

    Windows of even size must be hit exactly once, odd ones at most once;
    a chosen ``i`` in ``A_j`` contributes ``(-1)^(m_j - i)``, and each
    skipped window a further ``-1``.
    """
    n = cd_degree(w)
    ms, windows = sparse_windows(w)
    choices = []
    for m, A in zip(ms, windows):
        opts = [(i, -1 if (m - i) % 2 else 1) for i in A]
        if len(A) % 2:
            opts.append((None, -1))
        choices.append(opts)
    total = 0
    for pick in product(*choices):
        sign, mask = 1, 0
        for i, s in pick:
            sign *= s
            if i is not None:
                mask |= 1 << (i - 1)
        total += sign * stats.counts.get((n + 1, mask), 0)
    return total


def cd_poly_from_stats(stats: PathStats, l: int) -> dict[str, int]:
    out = {}
    for n in admissible_degrees(l):
        for w in cd_words(n):
            c = cd_coefficient(w, stats)
            if c:
                out[w] = c
    return out


def reconstruct(poly: dict[str, int]) -> QSymVec:
    """``sum_w [w] Theta_w`` in the L basis."""
    acc = QSymVec("L", {})
    for w, c in poly.items():
        if c:
            acc = acc + theta_in_L(w).scale(c)
    return acc


def complete_cd_index(
    W: CoxeterSystem, u, v, ordering: ReflectionOrdering = LEX, verify: bool = True
) -> CompleteCdIndex:
    key = IntervalKey.of(W, u, v)
    l = W.length(v) - W.length(u)
    if u == v:
        b_stats(W, u, v, ordering)  # raises when incomparable
        return CompleteCdIndex({}, key, -1)
    stats = b_stats(W, u, v, ordering)
    poly = cd_poly_from_stats(stats, l)
    if verify:
        Ft = QSymVec("L", stats.by_composition)
        rebuilt = reconstruct(poly)
        if rebuilt != Ft:
            raise ReconstructionError(f"sum [w] Theta_w differs from F-tilde on {key}")
    return CompleteCdIndex(sorted_cd(poly), key, l - 1)


def k_vector(stats: PathStats, n: int) -> dict[frozenset, int]:
    """Sparse k-vector ``k_S = sum_{T <= S} (-1)^{|S-T|} b_T`` at path length ``n+1``."""
    out = {}
    for S in sparse_subsets(n):
        elems = sorted(S)
        total = 0
        for bits in range(1 << len(elems)):
            mask = 0
            size = 0
            for j, s in enumerate(elems):
                if bits >> j & 1:
                    mask |= 1 << (s - 1)
                    size += 1
            sgn = -1 if (len(elems) - size) % 2 else 1
            total += sgn * stats.counts.get((n + 1, mask), 0)
        out[S] = total
    return out


def cd_from_k(w: str, kvec: dict[frozenset, int]) -> int:
    """``[w] = sum (-1)^{sum (m_j - i_j)} k_{i_1 ... i_k}`` over ``i_j`` in ``A_j``."""
    ms, windows = sparse_windows(w)
    total = 0
    for pick in product(*windows):
        e = sum(m - i for m, i in zip(ms, pick))
        total += (-1 if e % 2 else 1) * kvec.get(frozenset(pick), 0)
    return total


def ab_expand_word(w: str) -> list[str]:
    """ab-words of ``w(a+b, ab+ba)``; each occurs once."""
    out = [""]
    for ch in w:
        pieces = ("a", "b") if ch == "c" else ("ab", "ba")
        out = [x + p for x in out for p in pieces]
    return out


def ab_expansion(poly: dict[str, int]) -> dict[str, int]:
    out: dict[str, int] = {}
    for w, c in poly.items():
        for x in ab_expand_word(w):
            out[x] = out.get(x, 0) + c
    return {x: c for x, c in out.items() if c}


def path_weights(stats: PathStats) -> dict[str, int]:
    """Multiset of path weights: a path of length ``k`` gives the ab-word of length
    ``k-1`` with b exactly at its descents."""
    out: dict[str, int] = {}
    for (k, m), c in stats.counts.items():
        word = "".join("b" if m >> i & 1 else "a" for i in range(k - 1))
        out[word] = out.get(word, 0) + c
    return out


def r_tilde_from_cd(poly: dict[str, int]) -> IntPoly:
    """``q * psi(q, 0)``: only pure powers of c survive."""
    coeffs: dict[int, int] = {}
    for w, c in poly.items():
        if "d" not in w:
            coeffs[len(w) + 1] = coeffs.get(len(w) + 1, 0) + c
    return IntPoly(coeffs)


def sum_identities(poly: dict[str, int], stats: PathStats, n: int) -> tuple[bool, bool]:
    """
    At cd-degree ``n``: weighted sum ``sum 2^(n - #d) [w]`` against the number
    of paths of length ``n+1``, and plain ``sum [w]`` against ``b_{1,3,5,...}``.
    """
    words = cd_words(n)
    weighted = sum(2 ** (n - d_count(w)) * poly.get(w, 0) for w in words)
    plain = sum(poly.get(w, 0) for w in words)
    paths = sum(c for (k, _), c in stats.counts.items() if k == n + 1)
    odd_mask = sum(1 << (i - 1) for i in range(1, n + 1, 2))
    return weighted == paths, plain == stats.counts.get((n + 1, odd_mask), 0)


# --- ordinary cd-index from the flag vectors of the poset ----------------


def flag_f_vector(W: CoxeterSystem, u, v) -> dict[int, int]:
    """
    ``f_S`` for every mask ``S`` over ``[l-1]``: chains ``u < x_1 < ... < v``
    whose interior ranks (relative to ``u``) are exactly ``S``.
    """
    lu = W.length(u)
    l = W.length(v) - lu
    els = W.interval(u, v)
    levels: list[list] = [[] for _ in range(l + 1)]
    for x in els:
        levels[W.length(x) - lu].append(x)
    leq_cache: dict[tuple[int, int], list[list[int]]] = {}

    def leq(a: int, b: int) -> list[list[int]]:
        if (a, b) not in leq_cache:
            leq_cache[(a, b)] = [[1 if W.bruhat_leq(x, y) else 0 for y in levels[b]] for x in levels[a]]
        return leq_cache[(a, b)]

    # ends[mask] = chain counts ending at each element of the top rank in mask
    ends: dict[int, list[int]] = {0: [1]}
    top_of = {0: 0}
    f = {}
    for mask in range(1 << max(l - 1, 0)):
        if mask:
            top = mask.bit_length()
            prev = mask & ~(1 << (top - 1))
            M = leq(top_of[prev], top)
            vec = ends[prev]
            ends[mask] = [sum(vec[a] * M[a][b] for a in range(len(vec))) for b in range(len(levels[top]))]
            top_of[mask] = top
        M = leq(top_of[mask], l)
        f[mask] = sum(ends[mask][a] * M[a][0] for a in range(len(ends[mask])))
    return f


def ab_index(f: dict[int, int], l: int) -> dict[str, int]:
    """Flag h-vector as an ab-polynomial (b at the positions of ``S``)."""
    out = {}
    n = max(l - 1, 0)
    for S in range(1 << n):
        h = 0
        T = S
        while True:
            sgn = -1 if bin(S & ~T).count("1") % 2 else 1
            h += sgn * f[T]
            if T == 0:
                break
            T = (T - 1) & S
        if h:
            out["".join("b" if S >> i & 1 else "a" for i in range(n))] = h
    return out


def _lexmax(w: str) -> str:
    return "".join("b" if ch == "c" else "ba" for ch in w)


def cd_from_ab(ab: dict[str, int], n: int) -> dict[str, int]:
    """
    Solve ``ab = psi(a+b, ab+ba)`` for homogeneous ``psi`` of degree ``n``.

    The largest ab-word in the expansion of ``w`` is ``c->b, d->ba``; these
    leading words are distinct, so peeling words off in decreasing order of
    leading word is a triangular solve.  A nonzero remainder means the input
    is not a cd-polynomial.
    """
    resid = dict(ab)
    out = {}
    for w in sorted(cd_words(n), key=_lexmax, reverse=True):
        c = resid.get(_lexmax(w), 0)
        if c:
            out[w] = c
            for x in ab_expand_word(w):
                resid[x] = resid.get(x, 0) - c
    if any(resid.values()):
        raise ReconstructionError("ab-index is not in the cd-subalgebra")
    return out


def ordinary_cd_index(W: CoxeterSystem, u, v) -> dict[str, int]:
    """cd-index of the poset ``[u, v]`` (homogeneous of degree ``l - 1``)."""
    l = W.length(v) - W.length(u)
    if l < 1:
        raise ValueError("ordinary cd-index needs u < v")
    return sorted_cd(cd_from_ab(ab_index(flag_f_vector(W, u, v), l), l - 1))


def top_part(poly: dict[str, int], n: int) -> dict[str, int]:
    return {w: c for w, c in poly.items() if cd_degree(w) == n and c}


def f_tilde_m(W: CoxeterSystem, u, v, ordering: ReflectionOrdering = LEX) -> QSymVec:
    return l_to_m(f_tilde(W, u, v, ordering))

