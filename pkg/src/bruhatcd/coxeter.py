"""
Symmetric groups and finite direct products of them, in one-line notation.

An element of ``S_{n1} x S_{n2} x ...`` is a flat tuple: the concatenated
windows of its factors, each window a permutation of ``1..n_i``.  For a single
factor this is just the usual one-line notation.

Products are composed as functions, ``(x*y)(i) = x(y(i))``, so right
multiplication by the simple generator at position ``p`` swaps window entries
``p`` and ``p+1``, while left multiplication by a reflection swaps two values.

>>> W = CoxeterSystem.parse_name("S4")
>>> W.length(W.parse("4231"))
5
>>> sorted(W.right_descents(W.parse("4231")))
[1, 3]
>>> len(W.interval(W.parse("1234"), W.parse("4231")))
20
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations, product
from typing import NamedTuple, Optional

__all__ = [
    "CoxeterSystem",
    "Reflection",
    "ReflectionOrdering",
    "IncomparableError",
    "compare_reflections",
    "LEX",
    "REVLEX",
]

Element = tuple


class IncomparableError(ValueError):
    """Raised when an interval ``[u, v]`` is requested with ``u`` not below ``v``."""


class Reflection(NamedTuple):
    """The transposition of values ``i < j`` in factor ``factor`` (0-based)."""

    factor: int
    i: int
    j: int

    def text(self, single: bool = True) -> str:
        body = f"({self.i},{self.j})"
        return body if single else f"{self.factor + 1}:{body}"


@dataclass(frozen=True)
class ReflectionOrdering:
    """
    One of two canonical reflection orderings: ``lex`` compares
    ``(factor, i, j)`` lexicographically, ``revlex`` is its reverse.
    """

    mode: str = "lex"

    def __post_init__(self):
        if self.mode not in ("lex", "revlex"):
            raise ValueError(f"unknown reflection ordering {self.mode!r}")

    def key(self, t: Reflection) -> tuple[int, int, int]:
        k = (t.factor, t.i, t.j)
        return k if self.mode == "lex" else (-k[0], -k[1], -k[2])

    def ranks(self, reflections) -> dict[Reflection, int]:
        return {t: r for r, t in enumerate(sorted(reflections, key=self.key))}


LEX = ReflectionOrdering("lex")
REVLEX = ReflectionOrdering("revlex")


def compare_reflections(t1: Reflection, t2: Reflection, ordering: ReflectionOrdering = LEX) -> int:
    """Return -1, 0 or 1 as ``t1`` is less than, equal to, or greater than ``t2``."""
    a, b = ordering.key(t1), ordering.key(t2)
    return (a > b) - (a < b)


_NAME = re.compile(r"S(\d+)")


@dataclass(frozen=True)
class CoxeterSystem:
    """``S_{n1} x ... x S_{nk}`` given by its factor degrees."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        if not self.degrees or any(n < 1 for n in self.degrees):
            raise ValueError(f"bad factor degrees {self.degrees}")

    # construction and text forms
    @classmethod
    def symmetric(cls, n: int) -> "CoxeterSystem":
        return cls((n,))

    @classmethod
    def parse_name(cls, name: str) -> "CoxeterSystem":
        """Parse ``"S4"`` or ``"S2xS3"``."""
        parts = name.strip().split("x")
        degs = []
        for p in parts:
            m = _NAME.fullmatch(p.strip())
            if m is None:
                raise ValueError(f"bad group name {name!r}")
            degs.append(int(m.group(1)))
        return cls(tuple(degs))

    @property
    def name(self) -> str:
        return "x".join(f"S{n}" for n in self.degrees)

    @property
    def generator_count(self) -> int:
        return sum(n - 1 for n in self.degrees)

    @cached_property
    def blocks(self) -> tuple[tuple[int, int], ...]:
        """``(offset, degree)`` per factor within the flat window."""
        out, off = [], 0
        for n in self.degrees:
            out.append((off, n))
            off += n
        return tuple(out)

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """1-based flat positions ``p`` such that ``s_p`` swaps ``p, p+1``."""
        return tuple(off + i for off, n in self.blocks for i in range(1, n))

    def parse(self, text: str) -> Element:
        pieces = text.strip().split("|")
        if len(pieces) != len(self.degrees):
            raise ValueError(f"{text!r} does not have {len(self.degrees)} factor(s)")
        out = []
        for piece, n in zip(pieces, self.degrees):
            piece = piece.strip()
            if "," in piece or n > 9:
                w = [int(p) for p in piece.split(",")]
            else:
                if not piece.isdigit():
                    raise ValueError(f"bad window {piece!r}")
                w = [int(ch) for ch in piece]
            if sorted(w) != list(range(1, n + 1)):
                raise ValueError(f"{piece!r} is not a permutation of 1..{n}")
            out.extend(w)
        return tuple(out)

    def format(self, x: Element) -> str:
        parts = []
        for off, n in self.blocks:
            w = x[off:off + n]
            parts.append("".join(map(str, w)) if n <= 9 else ",".join(map(str, w)))
        return "|".join(parts)

    def factors(self, x: Element) -> list[tuple[int, ...]]:
        return [tuple(x[off:off + n]) for off, n in self.blocks]

    def join(self, parts) -> Element:
        return tuple(v for p in parts for v in p)

    # group structure
    @cached_property
    def identity(self) -> Element:
        return tuple(i for _, n in self.blocks for i in range(1, n + 1))

    @cached_property
    def elements(self) -> tuple[Element, ...]:
        """All elements, ordered by length then window."""
        per = [permutations(range(1, n + 1)) for n in self.degrees]
        els = [self.join(p) for p in product(*per)]
        return tuple(sorted(els, key=lambda x: (self.length(x), x)))

    @cached_property
    def longest(self) -> Element:
        return self.join(tuple(range(n, 0, -1)) for n in self.degrees)

    def length(self, x: Element) -> int:
        return _length(x, self.blocks)

    def right_descents(self, x: Element) -> set[int]:
        return {p for p in self.generators if x[p - 1] > x[p]}

    def times_generator(self, x: Element, p: int) -> Element:
        """``x * s_p``: swap window entries at positions ``p`` and ``p+1``."""
        y = list(x)
        y[p - 1], y[p] = y[p], y[p - 1]
        return tuple(y)

    def multiply(self, x: Element, y: Element) -> Element:
        if not len(x) == len(y) == len(self.identity):
            raise ValueError("elements from different systems")
        out = []
        for off, n in self.blocks:
            out.extend(x[off + y[off + i] - 1] for i in range(n))
        return tuple(out)

    def inverse(self, x: Element) -> Element:
        out = [0] * len(x)
        for off, n in self.blocks:
            for i in range(n):
                out[off + x[off + i] - 1] = i + 1
        return tuple(out)

    # reflections and the Bruhat graph
    @cached_property
    def reflections(self) -> tuple[Reflection, ...]:
        return tuple(
            Reflection(f, i, j)
            for f, n in enumerate(self.degrees)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
        )

    def reflection_element(self, t: Reflection) -> Element:
        off, _ = self.blocks[t.factor]
        x = list(self.identity)
        x[off + t.i - 1], x[off + t.j - 1] = t.j, t.i
        return tuple(x)

    def as_reflection(self, z: Element) -> Optional[Reflection]:
        """The reflection equal to ``z``, or ``None``."""
        moved = [p for p, (a, b) in enumerate(zip(z, self.identity)) if a != b]
        if len(moved) != 2:
            return None
        p, r = moved
        if z[p] != self.identity[r] or z[r] != self.identity[p]:
            return None
        for f, (off, n) in enumerate(self.blocks):
            if off <= p < off + n:
                if r >= off + n:
                    return None
                return Reflection(f, p - off + 1, r - off + 1)
        return None

    def edge_label(self, x: Element, y: Element) -> Optional[Reflection]:
        """``y x^{-1}`` if it is a reflection and ``l(x) < l(y)``, else ``None``."""
        t = self.as_reflection(self.multiply(y, self.inverse(x)))
        if t is None or self.length(x) >= self.length(y):
            return None
        return t

    def up_edges(self, x: Element) -> list[tuple[Element, Reflection]]:
        """All Bruhat-graph edges out of ``x`` as ``(y, label)`` pairs."""
        return _up_edges(x, self.blocks)

    # Bruhat order
    def bruhat_leq(self, x: Element, y: Element) -> bool:
        for off, n in self.blocks:
            if not _leq_window(x[off:off + n], y[off:off + n]):
                return False
        return True

    def interval(self, u: Element, v: Element) -> list[Element]:
        """Elements of ``[u, v]`` ordered by length then window."""
        if not self.bruhat_leq(u, v):
            raise IncomparableError(f"{self.format(u)} is not below {self.format(v)}")
        lu, lv = self.length(u), self.length(v)
        return [
            x
            for x in self.elements
            if lu <= self.length(x) <= lv and self.bruhat_leq(u, x) and self.bruhat_leq(x, v)
        ]

    def comparable_pairs(self, strict: bool = True) -> list[tuple[Element, Element]]:
        """All ``(u, v)`` with ``u <= v`` (``u < v`` when ``strict``), in canonical order."""
        els = self.elements
        return [
            (u, v)
            for u in els
            for v in els
            if (u != v or not strict) and self.length(u) <= self.length(v) and self.bruhat_leq(u, v)
        ]


@lru_cache(maxsize=None)
def _length(x: tuple[int, ...], blocks) -> int:
    inv = 0
    for off, n in blocks:
        for a in range(off, off + n):
            xa = x[a]
            for b in range(a + 1, off + n):
                if xa > x[b]:
                    inv += 1
    return inv


def _leq_window(x, y) -> bool:
    # sorted-prefix (tableau) criterion
    n = len(x)
    for k in range(1, n):
        for a, b in zip(sorted(x[:k]), sorted(y[:k])):
            if a > b:
                return False
    return True


@lru_cache(maxsize=None)
def _up_edges(x: tuple[int, ...], blocks) -> list[tuple[tuple[int, ...], Reflection]]:
    out = []
    for f, (off, n) in enumerate(blocks):
        for a in range(off, off + n):
            for b in range(a + 1, off + n):
                if x[a] < x[b]:
                    y = list(x)
                    y[a], y[b] = y[b], y[a]
                    out.append((tuple(y), Reflection(f, x[a], x[b])))
    return out
