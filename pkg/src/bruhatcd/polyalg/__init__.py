"""Exact polynomials, compositions, cd-words and quasisymmetric bases."""

from .poly import HalfLaurent, IntPoly, Q, T
from .qsymvec import (
    QSymVec,
    l_to_m,
    m_product,
    m_to_l,
    peak_pairs,
    theta_in_L,
    theta_in_M,
    theta_sets,
)
from .words import *  # noqa: F401,F403
from .words import __all__ as _words_all


def truncate_D(p: IntPoly, j) -> IntPoly:
    """Keep the monomials of ``p`` of degree at most ``floor(j)``."""
    return p.truncate(j)


__all__ = [
    "HalfLaurent",
    "IntPoly",
    "Q",
    "T",
    "QSymVec",
    "l_to_m",
    "m_to_l",
    "m_product",
    "peak_pairs",
    "theta_in_L",
    "theta_in_M",
    "theta_sets",
    "truncate_D",
    *_words_all,
]
