"""Brute-force wedge action: expand wedges into tensors, act, recollect.

Independent of the closed-form column rule in ``fockbases.fock``; only the
tableau <-> column bookkeeping is shared.
"""

from __future__ import annotations

import itertools

from fockbases.kl import length
from fockbases.laurent import LaurentPoly
from fockbases.weights import Structure, columns, tableau_from_columns

Q = LaurentPoly.q()
ONE = LaurentPoly(1)


def wedge_expansion(col):
    """``v_{i_1} ^ ... ^ v_{i_n} = sum_w (-q)^{l(w)} v_{i_w(1)} x ... x v_{i_w(n)}``."""
    n = len(col)
    out = {}
    for w in itertools.permutations(range(1, n + 1)):
        out[tuple(col[k - 1] for k in w)] = (-Q) ** length(w)
    return out


def tensor_expansion(cols):
    out = {(): ONE}
    for col in cols:
        nxt = {}
        exp = wedge_expansion(col)
        for a, ca in out.items():
            for b, cb in exp.items():
                nxt[a + b] = ca * cb
        out = nxt
    return out


def _k_exp(i, j, sign):
    # D_i^{-1} D_{i+1} on v_j (sign=+1), or its inverse (sign=-1)
    return sign * ((j == i + 1) - (j == i))


def act(gen, i, tensor):
    """Iterated coproduct of ``E_i``/``F_i``/``D_i`` on a pure tensor."""
    out = {}
    n = len(tensor)
    if gen == "D":
        return {tensor: Q ** sum(1 for x in tensor if x == i)}
    for p in range(n):
        x = tensor[p]
        if gen == "F" and x == i:
            e = sum(_k_exp(i, y, 1) for y in tensor[:p])
            new = tensor[:p] + (i + 1,) + tensor[p + 1:]
        elif gen == "E" and x == i + 1:
            e = sum(_k_exp(i, y, -1) for y in tensor[p + 1:])
            new = tensor[:p] + (i,) + tensor[p + 1:]
        else:
            continue
        out[new] = out.get(new, LaurentPoly()) + Q ** e
    return out


def oracle_image(gen, i, a, level, structure=Structure.STANDARD):
    """``X . M_A`` as a dict ``{tableau: coeff}``, recollected from tensors."""
    cols = columns(a, level)
    if structure is Structure.REVERSE:
        cols = cols[::-1]
    vec = {}
    for t, c in tensor_expansion(cols).items():
        for t2, c2 in act(gen, i, t).items():
            vec[t2] = vec.get(t2, LaurentPoly()) + c * c2
    vec = {t: c for t, c in vec.items() if c}
    sizes = [len(c) for c in cols]
    result = {}
    while vec:
        # the lexicographically largest surviving tensor is a leading tensor
        lead = max(vec)
        blocks, pos = [], 0
        for s in sizes:
            blocks.append(lead[pos:pos + s])
            pos += s
        if any(list(b) != sorted(b, reverse=True) or len(set(b)) != len(b) for b in blocks):
            raise AssertionError(f"image not in the wedge span near {lead}")
        coeff = vec[lead]
        real_cols = blocks[::-1] if structure is Structure.REVERSE else blocks
        b = tableau_from_columns(a.charge, real_cols, level)
        result[b] = coeff
        for t, c in tensor_expansion(blocks).items():
            v = vec.get(t, LaurentPoly()) - coeff * c
            if v:
                vec[t] = v
            else:
                vec.pop(t, None)
    return result
