"""
R-polynomials, R-tilde polynomials and Kazhdan-Lusztig polynomials of a
Bruhat interval, by their defining recursions.

All three are memoized on ``(system, u, v)``; the caches are plain
``functools.lru_cache`` tables, so each worker process keeps its own and
results do not depend on cache state.

>>> from bruhatcd.coxeter import CoxeterSystem
>>> W = CoxeterSystem.parse_name("S4")
>>> u, v = W.parse("1234"), W.parse("4231")
>>> str(r_tilde(W, u, v)), str(kl_polynomial(W, u, v))
('q^5+2q^3+q', 'q+1')
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .coxeter import CoxeterSystem
from .polyalg import HalfLaurent, IntPoly, Q

__all__ = [
    "IntervalKey",
    "r_polynomial",
    "r_tilde",
    "r_tilde_residual",
    "kl_polynomial",
    "kl_condition_residual",
    "clear_caches",
]


class IntervalKey(NamedTuple):
    system: str
    u: str
    v: str

    @classmethod
    def of(cls, W: CoxeterSystem, u, v) -> "IntervalKey":
        return cls(W.name, W.format(u), W.format(v))


_ONE = IntPoly(1)
_ZERO = IntPoly()
_QM1 = Q - 1


@lru_cache(maxsize=None)
def r_polynomial(W: CoxeterSystem, u: tuple, v: tuple) -> IntPoly:
    """``R_{u,v}``; zero unless ``u <= v``."""
    if u == v:
        return _ONE
    if W.length(u) >= W.length(v) or not W.bruhat_leq(u, v):
        return _ZERO
    s = min(W.right_descents(v))
    us, vs = W.times_generator(u, s), W.times_generator(v, s)
    if u[s - 1] > u[s]:
        return r_polynomial(W, us, vs)
    return Q * r_polynomial(W, us, vs) + _QM1 * r_polynomial(W, u, vs)


def _tilde_basis(l: int, k: int) -> HalfLaurent:
    # t^l (t - t^{-1})^k, the image of q^k under the substitution
    return (HalfLaurent({1: 1, -1: -1}) ** k).shift(l)


@lru_cache(maxsize=None)
def r_tilde(W: CoxeterSystem, u: tuple, v: tuple) -> IntPoly:
    """
    The polynomial ``Rt`` with ``R_{u,v}(q) = q^(l/2) Rt(q^(1/2) - q^(-1/2))``,
    found by a triangular solve from the top ``t``-degree down.
    """
    R = r_polynomial(W, u, v)
    if not R:
        return _ZERO
    l = W.length(v) - W.length(u)
    resid = HalfLaurent.from_intpoly(R)
    coeffs = [0] * (l + 1)
    for k in range(l, -1, -1):
        c = resid[l + k]
        if c:
            coeffs[k] = c
            resid = resid - _tilde_basis(l, k) * c
    if resid:
        raise ArithmeticError(
            f"R-tilde solve left residual {resid} on [{W.format(u)}, {W.format(v)}]"
        )
    return IntPoly(coeffs)


def r_tilde_residual(W: CoxeterSystem, u: tuple, v: tuple) -> HalfLaurent:
    """``R(t^2) - t^l Rt(t - 1/t)``; zero when the two are consistent."""
    R = HalfLaurent.from_intpoly(r_polynomial(W, u, v))
    l = W.length(v) - W.length(u)
    rebuilt = HalfLaurent()
    for k, c in r_tilde(W, u, v).items():
        rebuilt = rebuilt + _tilde_basis(l, k) * c
    return R - rebuilt


@lru_cache(maxsize=None)
def kl_polynomial(W: CoxeterSystem, u: tuple, v: tuple) -> IntPoly:
    """
    ``P_{u,v}``.  With ``S = sum_{u < z <= v} R_{u,z} P_{z,v}`` the defining
    identity reads ``q^l P(1/q) - P(q) = S``, and the degree bound
    ``deg P < l/2`` separates the two sides: ``p_i = [q^(l-i)] S``.
    """
    if u == v:
        return _ONE
    if W.length(u) >= W.length(v) or not W.bruhat_leq(u, v):
        return _ZERO
    l = W.length(v) - W.length(u)
    S = _ZERO
    for z in W.interval(u, v):
        if z != u:
            S = S + r_polynomial(W, u, z) * kl_polynomial(W, z, v)
    coeffs = [S[l - i] for i in range((l + 1) // 2)]
    return IntPoly(coeffs)


def kl_condition_residual(W: CoxeterSystem, u: tuple, v: tuple) -> IntPoly:
    """``q^l P_{u,v}(1/q) - sum_{u <= z <= v} R_{u,z} P_{z,v}``."""
    l = W.length(v) - W.length(u)
    P = kl_polynomial(W, u, v)
    rhs = _ZERO
    for z in W.interval(u, v):
        rhs = rhs + r_polynomial(W, u, z) * kl_polynomial(W, z, v)
    return P.reciprocal(l) - rhs


def clear_caches() -> None:
    for f in (r_polynomial, r_tilde, kl_polynomial):
        f.cache_clear()
