"""
Exact integer polynomials in ``q`` and Laurent polynomials in ``t = q^(1/2)``.

>>> p = IntPoly([1, 1])
>>> str(p * p)
'q^2+2q+1'
>>> IntPoly.parse('q^5+2q^3+q') == IntPoly({5: 1, 3: 2, 1: 1})
True
>>> str(HalfLaurent({-1: 1, 1: -1}))
'-t+t^-1'
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Union

__all__ = ["IntPoly", "HalfLaurent", "Q", "T"]

_TERM = re.compile(r"([+-]?)(\d*)(?:([qt])(?:\^(-?\d+))?)?")


def _parse_terms(text: str, var: str) -> dict[int, int]:
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    out: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (m.group(3) not in (None, var)):
            raise ValueError(f"cannot parse {text!r} at offset {pos}")
        sign, digits, sym, exp = m.groups()
        if not digits and sym is None:
            raise ValueError(f"cannot parse {text!r} at offset {pos}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        e = 0 if sym is None else (int(exp) if exp is not None else 1)
        out[e] = out.get(e, 0) + c
        pos = m.end()
    return {e: c for e, c in out.items() if c}


def _format_terms(coeffs: Mapping[int, int], var: str) -> str:
    if not coeffs:
        return "0"
    parts = []
    for e in sorted(coeffs, reverse=True):
        c = coeffs[e]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if a == 1 else f"{a}{mono}"
        parts.append(sign + body)
    s = "".join(parts)
    return s[1:] if s[0] == "+" else s


class IntPoly:
    """
    Polynomial in ``q`` with arbitrary-precision integer coefficients.

    Stored densely, lowest degree first, without trailing zeros; the zero
    polynomial has ``degree == -1``.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Union[Iterable[int], Mapping[int, int], int] = ()):
        if isinstance(coeffs, int):
            c = [coeffs]
        elif isinstance(coeffs, Mapping):
            if any(e < 0 for e in coeffs):
                raise ValueError("negative exponent in IntPoly")
            c = [0] * (max(coeffs, default=-1) + 1)
            for e, v in coeffs.items():
                c[e] += v
        else:
            c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(int(x) for x in c)
        self._hash = None

    # basic access
    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def __getitem__(self, i: int) -> int:
        return self._c[i] if 0 <= i < len(self._c) else 0

    def items(self):
        return ((i, c) for i, c in enumerate(self._c) if c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("IntPoly", self._c))
        return self._hash

    def __repr__(self) -> str:
        return f"IntPoly({str(self)!r})"

    def __str__(self) -> str:
        return _format_terms(dict(self.items()), "q")

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        return cls(_parse_terms(text, "q"))

    # arithmetic
    def __add__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly(other)
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly([-x for x in self._c])

    def __sub__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly(other)
        return self + (-other)

    def __rsub__(self, other) -> "IntPoly":
        return IntPoly(other) - self

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([other * x for x in self._c])
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not self._c or not other._c:
            return IntPoly()
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, x in enumerate(self._c):
            if x:
                for j, y in enumerate(other._c):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        out = IntPoly(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "IntPoly":
        """Multiply by ``q^k`` (``k >= 0``)."""
        if not self._c:
            return self
        return IntPoly((0,) * k + self._c)

    def __call__(self, x):
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def negate_var(self) -> "IntPoly":
        """Return ``p(-q)``."""
        return IntPoly([c if i % 2 == 0 else -c for i, c in enumerate(self._c)])

    def reciprocal(self, n: int) -> "IntPoly":
        """Return ``q^n p(1/q)``; requires ``n >= degree``."""
        if self.degree > n:
            raise ValueError(f"degree {self.degree} exceeds {n}")
        return IntPoly({n - i: c for i, c in self.items()})

    def truncate(self, j) -> "IntPoly":
        """Keep monomials of degree at most ``floor(j)``."""
        import math

        k = math.floor(j)
        if k < 0:
            return IntPoly()
        return IntPoly(self._c[: k + 1])


class HalfLaurent:
    """
    Laurent polynomial in ``t`` with integer coefficients, where ``t^2 = q``.

    Quantities such as ``q^(-l/2) P(q)`` live here with odd ``t``-exponents.
    """

    __slots__ = ("_d",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._d = {int(e): int(c) for e, c in (coeffs or {}).items() if c}

    @classmethod
    def from_intpoly(cls, p: IntPoly, *, inverse: bool = False, shift: int = 0) -> "HalfLaurent":
        """Embed ``t^shift * p(q)`` (or ``t^shift * p(1/q)`` with ``inverse``)."""
        sgn = -2 if inverse else 2
        return cls({sgn * i + shift: c for i, c in p.items()})

    def to_intpoly(self) -> IntPoly:
        if any(e < 0 or e % 2 for e in self._d):
            raise ValueError(f"{self} is not a polynomial in q")
        return IntPoly({e // 2: c for e, c in self._d.items()})

    def items(self):
        return sorted(self._d.items())

    def __getitem__(self, e: int) -> int:
        return self._d.get(e, 0)

    @property
    def max_exp(self) -> int | None:
        return max(self._d) if self._d else None

    @property
    def min_exp(self) -> int | None:
        return min(self._d) if self._d else None

    def __bool__(self) -> bool:
        return bool(self._d)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = HalfLaurent({0: other})
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self._d == other._d

    def __hash__(self) -> int:
        return hash(("HalfLaurent", frozenset(self._d.items())))

    def __repr__(self) -> str:
        return f"HalfLaurent({str(self)!r})"

    def __str__(self) -> str:
        return _format_terms(self._d, "t")

    @classmethod
    def parse(cls, text: str) -> "HalfLaurent":
        return cls(_parse_terms(text, "t"))

    def __add__(self, other) -> "HalfLaurent":
        if isinstance(other, int):
            other = HalfLaurent({0: other})
        out = dict(self._d)
        for e, c in other._d.items():
            out[e] = out.get(e, 0) + c
        return HalfLaurent(out)

    __radd__ = __add__

    def __neg__(self) -> "HalfLaurent":
        return HalfLaurent({e: -c for e, c in self._d.items()})

    def __sub__(self, other) -> "HalfLaurent":
        if isinstance(other, int):
            other = HalfLaurent({0: other})
        return self + (-other)

    def __mul__(self, other) -> "HalfLaurent":
        if isinstance(other, int):
            return HalfLaurent({e: other * c for e, c in self._d.items()})
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._d.items():
            for e2, c2 in other._d.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return HalfLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "HalfLaurent":
        out = HalfLaurent({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "HalfLaurent":
        """Multiply by ``t^k``."""
        return HalfLaurent({e + k: c for e, c in self._d.items()})


Q = IntPoly([0, 1])
T = HalfLaurent({1: 1})
