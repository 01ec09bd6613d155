"""
Bruhat intervals in symmetric groups and their products: R- and
Kazhdan-Lusztig polynomials, Bruhat path statistics, the R-quasisymmetric
function and its complete cd-index.

>>> from bruhatcd import CoxeterSystem, complete_cd_index, kl_polynomial
>>> W = CoxeterSystem.parse_name("S4")
>>> u, v = W.parse("1234"), W.parse("4231")
>>> str(kl_polynomial(W, u, v))
'q+1'
>>> complete_cd_index(W, u, v).poly
{'cccc': 1, 'ccd': 2, 'cdc': 2, 'dcc': 1, 'dd': 2, 'cc': 2, '': 1}
"""

from .brupaths import b_stats
from .coxeter import LEX, REVLEX, CoxeterSystem, IncomparableError, Reflection, ReflectionOrdering
from .klcd import a_vector, antisymmetric_part, g_dual, kl_from_cd
from .klcore import kl_polynomial, r_polynomial, r_tilde
from .qsym import complete_cd_index, f_tilde, ordinary_cd_index

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop every memo table in the package (timing runs start cold)."""
    from . import brupaths, coxeter, klcd, klcore, qsym
    from .polyalg import qsymvec, words

    for mod in (brupaths, coxeter, klcd, klcore, qsym, qsymvec, words):
        for obj in vars(mod).values():
            if callable(getattr(obj, "cache_clear", None)):
                obj.cache_clear()

__all__ = [
    "CoxeterSystem",
    "Reflection",
    "ReflectionOrdering",
    "IncomparableError",
    "LEX",
    "REVLEX",
    "r_polynomial",
    "r_tilde",
    "kl_polynomial",
    "b_stats",
    "f_tilde",
    "complete_cd_index",
    "ordinary_cd_index",
    "antisymmetric_part",
    "a_vector",
    "kl_from_cd",
    "g_dual",
    "clear_caches",
]
