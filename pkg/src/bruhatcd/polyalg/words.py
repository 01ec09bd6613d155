"""
Compositions, subset masks and cd-words.

A composition is a plain tuple of positive ints.  Subsets of ``[n-1]`` are
either frozensets or int bitmasks where bit ``i-1`` stands for ``i``.
A cd-word is a string over ``"cd"``; the empty word prints as ``"1"``.

>>> subset_to_composition({1, 3}, 5)
(1, 2, 2)
>>> composition_to_subset((1, 2, 2))
frozenset({1, 3})
>>> cd_words(3)
['ccc', 'cd', 'dc']
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Mapping

__all__ = [
    "Composition",
    "subset_to_composition",
    "composition_to_subset",
    "mask_to_composition",
    "composition_to_mask",
    "mask_to_subset",
    "subset_to_mask",
    "refines",
    "compositions",
    "all_compositions",
    "refinements",
    "coarsenings",
    "reverse_composition",
    "format_composition",
    "parse_composition",
    "cd_words",
    "cd_degree",
    "d_count",
    "c_runs",
    "head",
    "format_word",
    "parse_word",
    "word_key",
    "sorted_cd",
    "format_cdpoly",
    "sparse_subsets",
]

Composition = tuple


def subset_to_composition(S: Iterable[int], n: int) -> tuple[int, ...]:
    """The composition of ``n`` whose partial sums are the elements of ``S``."""
    pts = sorted(set(S))
    if any(not 1 <= s <= n - 1 for s in pts):
        raise ValueError(f"subset {pts} not contained in [1, {n - 1}]")
    if n == 0:
        return ()
    cuts = [0, *pts, n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def composition_to_subset(alpha: Iterable[int]) -> frozenset[int]:
    out, acc = [], 0
    parts = list(alpha)
    for a in parts[:-1]:
        acc += a
        out.append(acc)
    return frozenset(out)


def mask_to_subset(mask: int) -> frozenset[int]:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def subset_to_mask(S: Iterable[int]) -> int:
    m = 0
    for s in S:
        m |= 1 << (s - 1)
    return m


@lru_cache(maxsize=None)
def mask_to_composition(mask: int, n: int) -> tuple[int, ...]:
    if n == 0:
        return ()
    if mask >> (n - 1):
        raise ValueError(f"mask {mask:b} out of range for n={n}")
    out, last = [], 0
    for i in range(1, n):
        if mask >> (i - 1) & 1:
            out.append(i - last)
            last = i
    out.append(n - last)
    return tuple(out)


def composition_to_mask(alpha: Iterable[int]) -> int:
    return subset_to_mask(composition_to_subset(alpha))


def refines(alpha: Iterable[int], beta: Iterable[int]) -> bool:
    """True iff consecutive blocks of ``alpha`` sum to the parts of ``beta``."""
    alpha, beta = tuple(alpha), tuple(beta)
    if sum(alpha) != sum(beta):
        return False
    return composition_to_subset(beta) <= composition_to_subset(alpha)


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple[tuple[int, ...], ...]:
    """All compositions of ``n``, ordered by their subset mask."""
    if n == 0:
        return ((),)
    return tuple(mask_to_composition(m, n) for m in range(1 << (n - 1)))


def all_compositions(max_size: int) -> Iterator[tuple[int, ...]]:
    for n in range(max_size + 1):
        yield from compositions(n)


def _submasks(mask: int) -> Iterator[int]:
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def refinements(beta: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All ``alpha`` with ``alpha`` refining ``beta`` (including ``beta``)."""
    n = sum(beta)
    if n == 0:
        return [()]
    full = (1 << (n - 1)) - 1
    base = composition_to_mask(beta)
    free = full & ~base
    return [mask_to_composition(base | s, n) for s in _submasks(free)]


def coarsenings(alpha: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All ``beta`` refined by ``alpha`` (including ``alpha``)."""
    n = sum(alpha)
    if n == 0:
        return [()]
    return [mask_to_composition(s, n) for s in _submasks(composition_to_mask(alpha))]


def reverse_composition(alpha: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(reversed(alpha))


def format_composition(alpha: Iterable[int]) -> str:
    return "(" + ",".join(str(a) for a in alpha) + ")"


def parse_composition(text: str) -> tuple[int, ...]:
    body = text.strip().strip("()").strip()
    if not body:
        return ()
    parts = tuple(int(p) for p in body.split(","))
    if any(p <= 0 for p in parts):
        raise ValueError(f"composition parts must be positive: {text!r}")
    return parts


# --- cd-words -------------------------------------------------------------

@lru_cache(maxsize=None)
def cd_words(n: int) -> list[str]:
    """All cd-words of degree ``n`` in lexicographic order with c < d."""
    if n < 0:
        return []
    if n == 0:
        return [""]
    out = ["c" + w for w in cd_words(n - 1)]
    out += ["d" + w for w in cd_words(n - 2)]
    return out


def cd_degree(w: str) -> int:
    return len(w) + w.count("d")


def d_count(w: str) -> int:
    return w.count("d")


def c_runs(w: str) -> list[int]:
    """
    Lengths of the maximal c-runs separated by the d's, left to right.

    A word with ``k`` d's yields ``k+1`` runs.  Head-first reading
    ``c^r0 d c^r1 ... d c^rk`` is ``runs[0]`` then ``runs[1:]``; the
    tail-last reading used for subset families takes ``runs[:-1]`` as the
    blocks before each d and ``runs[-1]`` as the trailing run.
    """
    return [len(r) for r in w.split("d")]


def head(w: str) -> int:
    """Number of leading c's."""
    return c_runs(w)[0]


def format_word(w: str) -> str:
    return w if w else "1"


def parse_word(text: str) -> str:
    s = text.strip()
    if s == "1":
        return ""
    if any(ch not in "cd" for ch in s):
        raise ValueError(f"not a cd-word: {text!r}")
    return s


def word_key(w: str) -> tuple[int, str]:
    """Degree-major, then lexicographic with c < d."""
    return (cd_degree(w), w)


def sorted_cd(poly: Mapping[str, int]) -> dict[str, int]:
    """Canonically ordered copy of a cd-polynomial without zero entries."""
    return {w: poly[w] for w in sorted(poly, key=lambda w: (-cd_degree(w), w)) if poly[w]}


def format_cdpoly(poly: Mapping[str, int]) -> str:
    """Human-readable form, e.g. ``cccc+dcc+2cdc+1``."""
    terms = sorted_cd(poly)
    if not terms:
        return "0"
    parts = []
    for w, c in terms.items():
        a = abs(c)
        if not w:
            body = str(a)
        else:
            body = w if a == 1 else f"{a}{w}"
        parts.append(("-" if c < 0 else "+") + body)
    s = "".join(parts)
    return s[1:] if s[0] == "+" else s


def sparse_subsets(n: int) -> list[frozenset[int]]:
    """Subsets of ``[n]`` with no two consecutive elements and not containing ``n``."""
    out = []
    for k in range(n + 1):
        for c in combinations(range(1, n), k):
            if all(b - a > 1 for a, b in zip(c, c[1:])):
                out.append(frozenset(c))
    return out

