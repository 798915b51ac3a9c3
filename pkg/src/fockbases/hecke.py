"""Desk-scale degenerate cyclotomic Hecke algebras and their Specht modules.

Everything is exact over Q.  Algebra elements are dicts keyed by
``(exponents, perm)`` meaning ``x_1^{e_1} ... x_d^{e_d} w`` (x's on the
left).  Permutations are one-line tuples composed as functions.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

import sympy
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .weights import BlockFilter, Charge, CSTableau, RootElement, enumerate_block, residue, weight_of

__all__ = [
    "HeckeAlgebra",
    "HeckeModule",
    "FormalCharacter",
    "DeskBoundExceeded",
    "NonIntegerEigenvalue",
    "RelationFailure",
    "desk_bound",
    "seminormal_module",
    "specht_module",
    "formal_character",
    "block_split",
    "consistency_check",
    "check_dimension",
]

Perm = tuple[int, ...]
Key = tuple[tuple[int, ...], Perm]


class DeskBoundExceeded(ValueError):
    pass


class NonIntegerEigenvalue(ArithmeticError):
    pass


class RelationFailure(AssertionError):
    pass


def desk_bound() -> int:
    return int(os.environ.get("FOCKBASES_DESK_BOUND", "5000"))


def _compose(u: Perm, v: Perm) -> Perm:
    return tuple(u[k - 1] for k in v)


def _s(d: int, r: int) -> Perm:
    w = list(range(1, d + 1))
    w[r - 1], w[r] = w[r], w[r - 1]
    return tuple(w)


def _reduced_word(w: Perm) -> list[int]:
    """``w = s_{r_1} ... s_{r_m}`` via bubble sort on the right."""
    w = list(w)
    word = []
    changed = True
    while changed:
        changed = False
        for r in range(len(w) - 1):
            if w[r] > w[r + 1]:
                w[r], w[r + 1] = w[r + 1], w[r]
                word.append(r + 1)
                changed = True
    return word[::-1]


def _add(acc: dict, key, c):
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


# -- the algebra --------------------------------------------------------------


class HeckeAlgebra:
    """``H_d^m``: degenerate affine Hecke algebra modulo ``prod_j (x_1 - m_j)``."""

    def __init__(self, charges: Sequence[int], d: int):
        self.m = tuple(charges)
        self.l = len(self.m)
        self.d = d
        self.ident: Perm = tuple(range(1, d + 1))
        self._reductions: dict[int, dict] = {}

    # elements
    def one(self) -> dict:
        return {((0,) * self.d, self.ident): 1}

    def x(self, k: int) -> dict:
        e = [0] * self.d
        e[k - 1] = 1
        return {(tuple(e), self.ident): 1}

    def s(self, r: int) -> dict:
        return {((0,) * self.d, _s(self.d, r)): 1}

    # affine multiplication (no cyclotomic reduction)
    @lru_cache(maxsize=None)
    def _w_times_x(self, w: Perm, j: int) -> tuple:
        """``w x_j`` with x's moved to the left."""
        if w == self.ident:
            e = [0] * self.d
            e[j - 1] = 1
            return (((tuple(e), w), 1),)
        r = next(r for r in range(1, self.d) if w[r - 1] > w[r])  # right descent
        sr = _s(self.d, r)
        w1 = _compose(w, sr)
        j2 = r + 1 if j == r else r if j == r + 1 else j
        acc: dict = {}
        for (e, u), c in self._w_times_x(w1, j2):
            _add(acc, (e, _compose(u, sr)), c)
        eps = 1 if j == r + 1 else -1 if j == r else 0
        if eps:
            _add(acc, ((0,) * self.d, w1), eps)
        return tuple(sorted(acc.items()))

    def _w_times_xpow(self, w: Perm, b: tuple[int, ...]) -> dict:
        cur = {((0,) * self.d, w): 1}
        for j, n in enumerate(b, start=1):
            for _ in range(n):
                nxt: dict = {}
                for (e, u), c in cur.items():
                    for (e2, u2), c2 in self._w_times_x(u, j):
                        _add(nxt, (tuple(p + q for p, q in zip(e, e2)), u2), c * c2)
                cur = nxt
        return cur

    def mul_affine(self, a: Mapping, b: Mapping) -> dict:
        acc: dict = {}
        for (ea, wa), ca in a.items():
            for (eb, wb), cb in b.items():
                for (e, u), c in self._w_times_xpow(wa, eb).items():
                    _add(acc, (tuple(p + q for p, q in zip(ea, e)), _compose(u, wb)), ca * cb * c)
        return acc

    # cyclotomic reduction
    def _reduction(self, k: int) -> dict:
        """A normal-form expression of total degree < l equal to ``x_k^l``."""
        if k in self._reductions:
            return self._reductions[k]
        l, d = self.l, self.d
        if k == 1:
            # x_1^l - prod (x_1 - m_j), expanded
            poly = [1]
            for mj in self.m:
                poly = [a - mj * b for a, b in zip([0] + poly, poly + [0])]
            out: dict = {}
            for deg, c in enumerate(poly):
                if deg < l and c:
                    e = [0] * d
                    e[0] = deg
                    _add(out, (tuple(e), self.ident), -c)
        else:
            # x_k^l = s x_{k-1}^l s + (x_k^l - s x_{k-1}^l s), the bracket has lower degree
            s = self.s(k - 1)
            e = [0] * d
            e[k - 2] = l
            xl = {(tuple(e), self.ident): 1}
            low = {key: -c for key, c in self.mul_affine(self.mul_affine(s, xl), s).items()}
            e2 = [0] * d
            e2[k - 1] = l
            _add(low, (tuple(e2), self.ident), 1)
            main = self.mul_affine(self.mul_affine(s, self._reduction(k - 1)), s)
            out = dict(main)
            for key, c in low.items():
                _add(out, key, c)
            out = self.reduce(out)
        self._reductions[k] = out
        return out

    def reduce(self, elt: Mapping) -> dict:
        """Rewrite into the basis ``x^r w`` with every ``r_k < l``."""
        l = self.l
        work = dict(elt)
        done: dict = {}
        while work:
            key = max(work, key=lambda t: (sum(t[0]), t))
            c = work.pop(key)
            e, w = key
            big = [k for k, ek in enumerate(e, start=1) if ek >= l]
            if not big:
                _add(done, key, c)
                continue
            k = big[-1]
            rest = list(e)
            rest[k - 1] -= l
            left = {(tuple(rest), self.ident): c}
            prod = self.mul_affine(self.mul_affine(left, self._reduction(k)), {((0,) * self.d, w): 1})
            for key2, c2 in prod.items():
                _add(work, key2, c2)
        return done

    def normal_form(self, elt: Mapping) -> dict:
        return self.reduce(elt)

    def mul(self, a: Mapping, b: Mapping) -> dict:
        return self.reduce(self.mul_affine(a, b))

    def basis(self) -> list[Key]:
        perms = list(itertools.permutations(range(1, self.d + 1)))
        exps = list(itertools.product(range(self.l), repeat=self.d))
        return [(e, w) for e in exps for w in perms]

    def regular_representation(self) -> "HeckeModule":
        """Left multiplication on the spanning set ``{x^r w}``."""
        basis = self.basis()
        pos = {b: n for n, b in enumerate(basis)}

        def matrix(g):
            rows = [[0] * len(basis) for _ in basis]
            for col, b in enumerate(basis):
                for key, c in self.mul(g, {b: 1}).items():
                    rows[pos[key]][col] += c
            return _dm(rows)

        return HeckeModule(
            len(basis),
            [matrix(self.s(r)) for r in range(1, self.d)],
            [matrix(self.x(k)) for k in range(1, self.d + 1)],
            self.m,
        )


# -- modules ------------------------------------------------------------------


def _dm(rows) -> DomainMatrix:
    n = len(rows)
    m = len(rows[0]) if rows else 0
    return DomainMatrix([[QQ.convert(Fraction(v).numerator) / QQ.convert(Fraction(v).denominator) for v in r] for r in rows], (n, m), QQ)


def _eye(n: int) -> DomainMatrix:
    return DomainMatrix.eye(n, QQ).to_dense()


def _is_zero(m: DomainMatrix) -> bool:
    return all(v == 0 for row in m.to_list() for v in row)


def _kron(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    al, bl = a.to_list(), b.to_list()
    n, m = a.shape[0] * b.shape[0], a.shape[1] * b.shape[1]
    rows = [[al[i // b.shape[0]][j // b.shape[1]] * bl[i % b.shape[0]][j % b.shape[1]] for j in range(m)] for i in range(n)]
    return DomainMatrix(rows, (n, m), QQ)


@dataclass
class HeckeModule:
    dim: int
    s: list
    x: list
    charges: tuple = ()

    @property
    def d(self) -> int:
        return len(self.x)

    def relation_failures(self, cyclotomic: bool = True) -> list[str]:
        n, d = self.dim, self.d
        one = _eye(n)
        bad = []
        for r, sr in enumerate(self.s, start=1):
            if not _is_zero(sr * sr - one):
                bad.append(f"s_{r}^2")
            for t, st in enumerate(self.s, start=1):
                if t == r + 1 and not _is_zero(sr * st * sr - st * sr * st):
                    bad.append(f"braid s_{r} s_{t}")
                if t > r + 1 and not _is_zero(sr * st - st * sr):
                    bad.append(f"s_{r} s_{t} commute")
            for k, xk in enumerate(self.x, start=1):
                if k == r + 1:
                    if not _is_zero(sr * xk - self.x[r - 1] * sr - one):
                        bad.append(f"s_{r} x_{k}")
                elif k != r and not _is_zero(sr * xk - xk * sr):
                    bad.append(f"s_{r} x_{k} commute")
        for a, b in itertools.combinations(range(d), 2):
            if not _is_zero(self.x[a] * self.x[b] - self.x[b] * self.x[a]):
                bad.append(f"x_{a + 1} x_{b + 1} commute")
        if cyclotomic and self.charges and d:
            prod = one
            for mj in self.charges:
                prod = prod * (self.x[0] - one * QQ(mj))
            if not _is_zero(prod):
                bad.append("cyclotomic")
        return bad

    def central_elements(self) -> list:
        """``sum x_k`` and ``e_2(x)``: symmetric polynomials in the x's."""
        n = self.dim
        e1 = DomainMatrix.zeros((n, n), QQ).to_dense()
        e2 = DomainMatrix.zeros((n, n), QQ).to_dense()
        for a, xa in enumerate(self.x):
            e1 = e1 + xa
            for xb in self.x[a + 1:]:
                e2 = e2 + xa * xb
        return [e1, e2]

    def center_failures(self) -> list[str]:
        bad = []
        for name, z in zip(("e1", "e2"), self.central_elements()):
            for label, g in [(f"s_{r}", m) for r, m in enumerate(self.s, 1)] + [(f"x_{k}", m) for k, m in enumerate(self.x, 1)]:
                if not _is_zero(z * g - g * z):
                    bad.append(f"{name} does not commute with {label}")
        return bad

    def check(self, cyclotomic: bool = True) -> "HeckeModule":
        bad = self.relation_failures(cyclotomic)
        if bad:
            raise RelationFailure(", ".join(bad))
        return self


# -- Specht modules -----------------------------------------------------------


def _standard_tableaux(shape: Sequence[int]) -> list[dict[int, tuple[int, int]]]:
    """Standard Young tableaux of ``shape`` as maps entry -> (row, col), 0-based."""
    n = sum(shape)
    out = []

    def rec(k, filled: list[int], pos: dict):
        if k > n:
            out.append(dict(pos))
            return
        for r, length in enumerate(shape):
            if filled[r] < length and (r == 0 or filled[r - 1] > filled[r]):
                pos[k] = (r, filled[r])
                filled[r] += 1
                rec(k + 1, filled, pos)
                filled[r] -= 1
                del pos[k]

    rec(1, [0] * len(shape), {})
    return out


def seminormal_module(shape: Sequence[int], m: int) -> HeckeModule:
    """``ev_m^* S(shape)`` in Young's seminormal form; ``x_k`` acts by ``m + content``."""
    shape = tuple(shape)
    n = sum(shape)
    tabs = _standard_tableaux(shape)
    index = {tuple(sorted(t.items())): i for i, t in enumerate(tabs)}
    dim = len(tabs)
    s_mats = []
    for r in range(1, n):
        rows = [[Fraction(0)] * dim for _ in range(dim)]
        for i, t in enumerate(tabs):
            (r1, c1), (r2, c2) = t[r], t[r + 1]
            a = Fraction(1, (c2 - r2) - (c1 - r1))
            rows[i][i] = a
            if r1 != r2 and c1 != c2:
                sw = dict(t)
                sw[r], sw[r + 1] = t[r + 1], t[r]
                j = index[tuple(sorted(sw.items()))]
                # r+1 strictly lower than r in t: t is the earlier vector of the pair
                rows[j][i] = 1 if r2 > r1 else 1 - a * a
        s_mats.append(_dm(rows))
    x_mats = []
    for k in range(1, n + 1):
        x_mats.append(_dm([[m + (t[k][1] - t[k][0]) if i == j else 0 for j in range(dim)] for i, t in enumerate(tabs)]))
    return HeckeModule(dim, s_mats, x_mats, (m,)).check(cyclotomic=False)


def _outer(mods: Sequence[HeckeModule]) -> tuple[int, list, list]:
    """Generators of the parabolic subalgebra acting on ``M_1 x ... x M_l``."""
    dims = [md.dim for md in mods]
    total = 1
    for v in dims:
        total *= v
    s_par: dict[int, DomainMatrix] = {}
    x_par: list = []
    offset = 0
    for j, md in enumerate(mods):
        left = 1
        for v in dims[:j]:
            left *= v
        right = 1
        for v in dims[j + 1:]:
            right *= v

        def embed(a):
            return _kron(_kron(_eye(left), a), _eye(right))

        for r, sr in enumerate(md.s, start=1):
            s_par[offset + r] = embed(sr)
        for xk in md.x:
            x_par.append(embed(xk))
        offset += md.d
    return total, s_par, x_par


def induce(mods: Sequence[HeckeModule], charges: Sequence[int] = ()) -> HeckeModule:
    """``M_1 o M_2 o ... o M_l`` via minimal left coset representatives."""
    sizes = [md.d for md in mods]
    d = sum(sizes)
    blocks = []
    start = 0
    for c in sizes:
        blocks.append(range(start, start + c))
        start += c
    inner, s_par, x_par = _outer(mods)
    reps = [w for w in itertools.permutations(range(1, d + 1))
            if all(w[k] < w[k + 1] for b in blocks for k in list(b)[:-1])]
    reps.sort()
    rep_pos = {w: n for n, w in enumerate(reps)}
    alg = HeckeAlgebra((), d)
    one_inner = _eye(inner)

    def split(u: Perm) -> tuple[Perm, Perm]:
        # u = w y with w a coset representative and y in the parabolic subgroup
        w = []
        for b in blocks:
            w.extend(sorted(u[k] for k in b))
        w = tuple(w)
        winv = [0] * d
        for k, v in enumerate(w, start=1):
            winv[v - 1] = k
        y = tuple(winv[u[k] - 1] for k in range(d))
        return w, y

    def act_par(e: tuple[int, ...], y: Perm) -> DomainMatrix:
        m = one_inner
        for r in _reduced_word(y):
            m = m * s_par[r]
        for k, ek in enumerate(e):
            for _ in range(ek):
                m = m * x_par[k]
        return m

    def generator(elt: dict) -> DomainMatrix:
        dim = len(reps) * inner
        rows = [[QQ.zero] * dim for _ in range(dim)]
        for w in reps:
            prod = alg.mul_affine(elt, {((0,) * d, w): 1})
            col0 = rep_pos[w] * inner
            for (e, u), c in prod.items():
                # x^e u: move x^e to the right of u
                for (e2, u2), c2 in _x_left_to_right(alg, e, u).items():
                    w2, y = split(u2)
                    blk = act_par(e2, y).to_list()
                    row0 = rep_pos[w2] * inner
                    coeff = QQ.convert(c * c2)
                    for i in range(inner):
                        for j in range(inner):
                            if blk[i][j]:
                                rows[row0 + i][col0 + j] += coeff * blk[i][j]
        return DomainMatrix(rows, (dim, dim), QQ)

    s_mats = [generator(alg.s(r)) for r in range(1, d)]
    x_mats = [generator(alg.x(k)) for k in range(1, d + 1)]
    return HeckeModule(len(reps) * inner, s_mats, x_mats, tuple(charges))


def _x_left_to_right(alg: HeckeAlgebra, e: tuple[int, ...], u: Perm) -> dict:
    """Rewrite ``x^e u`` as a sum of ``u' x^{e'}`` (permutation first)."""
    # x_k u = u x_{u^-1(k)} + shorter terms; recurse on a left descent of u
    return _xr(alg, e, u)


@lru_cache(maxsize=None)
def _xk_times_w(d: int, k: int, w: Perm) -> tuple:
    """``x_k w`` as ``sum c u x^{e}`` with permutations on the left."""
    ident = tuple(range(1, d + 1))
    if w == ident:
        e = [0] * d
        e[k - 1] = 1
        return (((ident, tuple(e)), 1),)
    r = next(r for r in range(1, d) if w.index(r + 1) < w.index(r))  # left descent
    sr = _s(d, r)
    w1 = _compose(sr, w)
    # x_k s_r = s_r x_{s_r(k)} + eps
    k2 = r + 1 if k == r else r if k == r + 1 else k
    eps = -1 if k == r else 1 if k == r + 1 else 0
    acc: dict = {}
    for (u, e), c in _xk_times_w(d, k2, w1):
        _add(acc, (_compose(sr, u), e), c)
    if eps:
        _add(acc, (w1, (0,) * d), eps)
    return tuple(sorted(acc.items()))


def _xr(alg: HeckeAlgebra, e: tuple[int, ...], u: Perm) -> dict:
    d = alg.d
    cur = {(u, (0,) * d): 1}
    for k in range(d, 0, -1):
        for _ in range(e[k - 1]):
            nxt: dict = {}
            for (w, f), c in cur.items():
                for (w2, f2), c2 in _xk_times_w(d, k, w):
                    _add(nxt, (w2, tuple(a + b for a, b in zip(f, f2))), c * c2)
            cur = nxt
    return {(f, w): c for (w, f), c in cur.items()}


def specht_module(t: CSTableau, reverse: bool = False, bound: int | None = None) -> HeckeModule:
    """``S(A)``: induction product of evaluation lifts, one per component.

    ``reverse=True`` builds the product in the opposite component order.
    """
    lam = t.parts
    d = t.size
    l = t.charge.level
    bound = desk_bound() if bound is None else bound
    cost = l * sympy.factorial(d) * l ** d
    if cost > bound:
        raise DeskBoundExceeded(f"desk cost {cost} exceeds bound {bound}")
    pieces = [(m, p) for m, p in zip(t.charge.charges, lam)]
    if reverse:
        pieces = pieces[::-1]
    mods = [seminormal_module(p, m) for m, p in pieces if sum(p)]
    if not mods:
        return HeckeModule(1, [], [], t.charge.charges)
    return induce(mods, t.charge.charges).check()


# -- characters ---------------------------------------------------------------


@dataclass
class FormalCharacter:
    weights: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return sum(self.weights.values())

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        out = dict(self.weights)
        for k, v in other.weights.items():
            out[k] = out.get(k, 0) + v
        return FormalCharacter({k: v for k, v in out.items() if v})

    def scale(self, c: int) -> "FormalCharacter":
        return FormalCharacter({k: v * c for k, v in self.weights.items() if v * c})

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        return isinstance(other, FormalCharacter) and self.weights == other.weights

    def to_json(self) -> dict:
        return {",".join(map(str, k)): v for k, v in sorted(self.weights.items())}


def _int_roots(m: DomainMatrix) -> list[int]:
    x = sympy.Symbol("x")
    poly = sympy.Poly(m.charpoly(), x)
    roots = sympy.roots(poly, multiple=True)
    out = []
    for r in roots:
        if not (r.is_integer or (r.is_Rational and r.q == 1)):
            raise NonIntegerEigenvalue(f"eigenvalue {r} is not an integer")
        out.append(int(r))
    if len(out) != m.shape[0]:
        raise NonIntegerEigenvalue("characteristic polynomial has non-rational roots")
    return sorted(set(out))


def formal_character(mod: HeckeModule) -> FormalCharacter:
    """Dimensions of the simultaneous generalized eigenspaces of ``x_1..x_d``."""
    n = mod.dim
    if mod.d == 0:
        return FormalCharacter({(): n})
    one = _eye(n)
    roots = [_int_roots(xk) for xk in mod.x]
    powers = {}
    for k, xk in enumerate(mod.x):
        for i in roots[k]:
            m = xk - one * QQ(i)
            p = one
            for _ in range(n):
                p = p * m
            powers[(k, i)] = p
    out = {}
    for tup in itertools.product(*roots):
        stacked = powers[(0, tup[0])]
        for k in range(1, mod.d):
            stacked = stacked.vstack(powers[(k, tup[k])])
        dim = n - stacked.rank()
        if dim:
            out[tup] = dim
    ch = FormalCharacter(out)
    if ch.dim != n:
        raise NonIntegerEigenvalue(f"weight spaces account for {ch.dim} of {n} dimensions")
    return ch


# -- blocks and the consistency check -----------------------------------------


def block_split(charge: Charge, d: int) -> dict[RootElement, list[CSTableau]]:
    """Group the tableaux with ``d`` boxes by residue content."""
    from .weights import Multipartition

    groups: dict[RootElement, list[CSTableau]] = {}
    for parts in _multipartitions(d, charge.level):
        t = CSTableau(Multipartition(parts), charge)
        res = [residue(charge, k, i, j) for k, i, j in t.mp.boxes()]
        if any(r not in charge.index_set for r in res):
            continue
        groups.setdefault(weight_of(t), []).append(t)
    return {a: sorted(v) for a, v in sorted(groups.items(), key=lambda kv: tuple(kv[0].items()))}


def _partitions(n: int, cap: int | None = None):
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap or n), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _multipartitions(n: int, l: int):
    if l == 1:
        for p in _partitions(n):
            yield (p,)
        return
    for k in range(n + 1):
        for p in _partitions(k):
            for rest in _multipartitions(n - k, l - 1):
                yield (p,) + rest


@dataclass
class ConsistencyReport:
    alpha: RootElement
    passed: bool
    witness: str | None
    characters: dict
    simple_characters: dict

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha.to_json(),
            "passed": self.passed,
            "witness": self.witness,
            "specht": {str(k): v.to_json() for k, v in self.characters.items()},
            "simple": {str(k): v.to_json() for k, v in self.simple_characters.items()},
        }


def consistency_check(charge: Charge, alpha: Mapping[int, int], cache=None,
                      decomposition: tuple | None = None) -> ConsistencyReport:
    """Characters of Specht modules against ``d_{A,B}(1)``.

    Solves for the simple characters from the standard rows (unitriangular)
    and requires every other Specht character to be the predicted combination.
    """
    from .fock import decomposition_matrix_q1

    alpha = RootElement(alpha)
    rows, cols, D = decomposition if decomposition is not None else decomposition_matrix_q1(charge, alpha, cache)
    chars = {b: formal_character(specht_module(b)) for b in cols}
    col_pos = {b: n for n, b in enumerate(cols)}
    simple: dict = {}
    witness = None
    # process a standard label once every other row it involves is known
    pending = list(rows)
    while pending and witness is None:
        ready = [a for a in pending
                 if all(b == a or b in simple or not D[rows.index(b)][col_pos[a]] for b in rows)]
        if not ready:
            witness = "the standard block of the matrix is not unitriangular"
            break
        a = ready[0]
        pending.remove(a)
        ra = rows.index(a)
        if D[ra][col_pos[a]] != 1:
            witness = f"diagonal entry at {a} is {D[ra][col_pos[a]]}"
            break
        ch = chars[a]
        for b in rows:
            if b != a and D[rows.index(b)][col_pos[a]]:
                ch = ch - simple[b].scale(D[rows.index(b)][col_pos[a]])
        if any(v < 0 for v in ch.weights.values()) or not ch.weights:
            witness = f"simple character for {a} is not a nonzero nonnegative combination: {ch.to_json()}"
            break
        simple[a] = ch
    if witness is None:
        for b in cols:
            pred = FormalCharacter()
            for ra, a in enumerate(rows):
                if D[ra][col_pos[b]]:
                    pred = pred + simple[a].scale(D[ra][col_pos[b]])
            if pred != chars[b]:
                witness = f"ch S({b}) = {chars[b].to_json()} but the matrix predicts {pred.to_json()}"
                break
    if witness is None:
        keys = sorted({k for ch in simple.values() for k in ch.weights})
        mat = sympy.Matrix([[simple[a].weights.get(k, 0) for k in keys] for a in rows]) if rows else sympy.Matrix()
        if rows and mat.rank() != len(rows):
            witness = "simple characters are linearly dependent"
    if witness is None:
        for b, ch in chars.items():
            for tup in ch.weights:
                if RootElement.from_residues(tup) != alpha:
                    witness = f"S({b}) has weight {tup} outside the block"
                    break
    return ConsistencyReport(alpha, witness is None, witness, chars, simple)


def check_dimension(charges: Sequence[int], d: int) -> tuple[bool, int]:
    """``dim H_d^m = l^d d!``: normal forms span and the regular action is a representation."""
    alg = HeckeAlgebra(charges, d)
    reg = alg.regular_representation()
    bad = reg.relation_failures()
    return (not bad and reg.dim == len(charges) ** d * int(sympy.factorial(d))), reg.dim
