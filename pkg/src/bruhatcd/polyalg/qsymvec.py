"""
Finitely supported quasisymmetric functions in the monomial (``M``) and
fundamental (``L``) bases, plus the peak functions ``Theta_w``.

``Theta_w`` here is the unnormalized peak function; the version common in
the literature equals ``2^(#d(w)+1) * Theta_w``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .words import (
    c_runs,
    cd_degree,
    d_count,
    mask_to_composition,
    refinements,
)

__all__ = [
    "QSymVec",
    "l_to_m",
    "m_to_l",
    "m_product",
    "peak_pairs",
    "theta_sets",
    "theta_in_L",
    "theta_in_M",
]


@dataclass(frozen=True)
class QSymVec:
    """Integer vector over compositions, tagged with its basis."""

    basis: str
    coeffs: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in ("M", "L"):
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {tuple(a): int(c) for a, c in self.coeffs.items() if c}
        object.__setattr__(self, "coeffs", clean)

    def __getitem__(self, alpha) -> int:
        return self.coeffs.get(tuple(alpha), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSymVec):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.basis, frozenset(self.coeffs.items())))

    def _same(self, other: "QSymVec") -> None:
        if other.basis != self.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other: "QSymVec") -> "QSymVec":
        self._same(other)
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out.get(a, 0) + c
        return QSymVec(self.basis, out)

    def __sub__(self, other: "QSymVec") -> "QSymVec":
        return self + other.scale(-1)

    def scale(self, k: int) -> "QSymVec":
        return QSymVec(self.basis, {a: k * c for a, c in self.coeffs.items()})

    def degree_part(self, n: int) -> "QSymVec":
        return QSymVec(self.basis, {a: c for a, c in self.coeffs.items() if sum(a) == n})

    def __bool__(self) -> bool:
        return bool(self.coeffs)


def l_to_m(v: QSymVec) -> QSymVec:
    """Expand every ``L_beta`` into the ``M_alpha`` with ``alpha`` refining ``beta``."""
    if v.basis != "L":
        raise ValueError("l_to_m expects an L-basis vector")
    out: dict[tuple[int, ...], int] = {}
    for beta, c in v.coeffs.items():
        for alpha in refinements(beta):
            out[alpha] = out.get(alpha, 0) + c
    return QSymVec("M", out)


def m_to_l(v: QSymVec) -> QSymVec:
    """Inverse of :func:`l_to_m` by inclusion-exclusion over refinement."""
    if v.basis != "M":
        raise ValueError("m_to_l expects an M-basis vector")
    out: dict[tuple[int, ...], int] = {}
    for alpha, c in v.coeffs.items():
        la = len(alpha)
        for beta in refinements(alpha):
            sgn = -1 if (len(beta) - la) % 2 else 1
            out[beta] = out.get(beta, 0) + sgn * c
    return QSymVec("L", out)


@lru_cache(maxsize=None)
def _quasi_shuffle(a: tuple[int, ...], b: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    out: dict[tuple[int, ...], int] = {}
    for pre, last in (
        (_quasi_shuffle(a[:-1], b), (a[-1],)),
        (_quasi_shuffle(a, b[:-1]), (b[-1],)),
        (_quasi_shuffle(a[:-1], b[:-1]), (a[-1] + b[-1],)),
    ):
        for g, c in pre.items():
            key = g + last
            out[key] = out.get(key, 0) + c
    return out


def m_product(x: QSymVec, y: QSymVec) -> QSymVec:
    """Product of two M-basis vectors via the overlapping (quasi-)shuffle."""
    if x.basis != "M" or y.basis != "M":
        raise ValueError("m_product expects M-basis vectors")
    out: dict[tuple[int, ...], int] = {}
    for a, ca in x.coeffs.items():
        for b, cb in y.coeffs.items():
            for g, k in _quasi_shuffle(a, b).items():
                out[g] = out.get(g, 0) + ca * cb * k
    return QSymVec("M", out)


def peak_pairs(w: str) -> list[tuple[int, int]]:
    """
    The 2-element sets ``{m_j - 1, m_j}`` of ``w``, where ``m_j`` is the
    degree of the prefix of ``w`` ending at its ``j``-th d.
    """
    runs = c_runs(w)
    out, m = [], 0
    for r in runs[:-1]:
        m += r + 2
        out.append((m - 1, m))
    return out


@lru_cache(maxsize=None)
def theta_sets(w: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """
    Masks over ``[n]`` (``n = deg w``) of the families ``b[I^w]`` and
    ``B[I^w]``: sets meeting every peak pair, and those whose complement
    meets every pair as well.
    """
    n = cd_degree(w)
    pair_masks = [(1 << (a - 1)) | (1 << (b - 1)) for a, b in peak_pairs(w)]
    full = (1 << n) - 1
    small, big = [], []
    for T in range(1 << n):
        if all(T & p for p in pair_masks):
            small.append(T)
            if all((full & ~T) & p for p in pair_masks):
                big.append(T)
    return tuple(small), tuple(big)


def theta_in_L(w: str) -> QSymVec:
    """L-expansion of ``Theta_w``, homogeneous of degree ``deg w + 1``."""
    n = cd_degree(w)
    _, big = theta_sets(w)
    return QSymVec("L", {mask_to_composition(T, n + 1): 1 for T in big})


def theta_in_M(w: str) -> QSymVec:
    """M-expansion of ``Theta_w``: ``sum 2^(|S| - #d) M_S`` over ``b[I^w]``."""
    n = cd_degree(w)
    k = d_count(w)
    small, _ = theta_sets(w)
    return QSymVec("M", {mask_to_composition(S, n + 1): 2 ** (bin(S).count("1") - k) for S in small})

