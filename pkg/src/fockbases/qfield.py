"""Exact linear algebra over the rational function field Q(q).

Only needed where vectors of two different Fock spaces must be compared
through the common highest-weight submodule; everything else stays in the
Laurent ring.  Backed by sympy's ``DomainMatrix``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import sympy
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .laurent import LaurentPoly

Q_SYM = sympy.Symbol("q")
K = QQ.frac_field(Q_SYM)

__all__ = ["K", "to_field", "field_bar", "column_matrix", "independent_columns", "solve_in_span"]


@lru_cache(maxsize=None)
def _mono(e: int):
    return K.convert(Q_SYM**e)


def to_field(p: LaurentPoly):
    out = K.zero
    for e, c in p.terms:
        out = out + K.convert(c) * _mono(e)
    return out


def field_bar(x):
    """``q -> q^-1`` on an element of ``K``."""
    expr = K.to_sympy(x).subs(Q_SYM, 1 / Q_SYM)
    return K.from_sympy(sympy.cancel(expr))


def column_matrix(columns: Sequence[Sequence]) -> DomainMatrix:
    """Matrix whose columns are the given vectors (entries in ``K`` or Laurent)."""
    cols = [[to_field(x) if isinstance(x, LaurentPoly) else x for x in c] for c in columns]
    n = len(cols[0]) if cols else 0
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(n)]
    return DomainMatrix(rows, (n, len(cols)), K)


def independent_columns(m: DomainMatrix) -> list[int]:
    _, pivots = m.to_dense().rref()
    return list(pivots)


def solve_in_span(basis: DomainMatrix, v: DomainMatrix):
    """Coefficients ``c`` with ``basis c = v`` for a full-column-rank basis, or None."""
    n, r = basis.shape
    aug = basis.hstack(v).to_dense()
    red, pivots = aug.rref()
    if r in pivots:
        return None
    rows = red.to_Matrix()
    return [K.from_sympy(sympy.cancel(rows[k, r])) for k in range(r)]
