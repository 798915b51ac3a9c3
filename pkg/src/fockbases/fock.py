"""Weight spaces of the Fock space, its four bases and the checks tying them together.

Conventions for a block with labels ``Col`` (enumeration order):

* ``L`` has column ``B`` equal to ``L_B`` in monomial coordinates, so
  ``L[A, B] = p_{A,B}(-q)``.
* ``d = L^{-1}`` so that ``M_B = sum_A d[A, B] L_A``.
* ``bar`` has column ``B`` equal to ``bar(M_B)``; it equals ``L . conj(d)``.
* ``T`` is the canonical basis (bar-invariant, ``q^-1 Z[q^-1]`` lattice).
* ``Pq`` has column ``A`` equal to ``P_A``, i.e. ``Pq = d^T``.

In the reverse structure the same names refer to ``M~``, ``L~`` and ``d~``
and the order is reversed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .crystal import e_tilde, f_tilde, rectify_down, rectify_up, signature
from .kl import KLCache, parabolic_kl
from .laurent import ONE, ZERO, LaurentPoly, quantum_factorial, quantum_integer
from .report import Report
from .matrix import BarSemilinearMap, Lattice, PolyMatrix, invert_unitriangular, lusztig_solve
from .weights import (
    BlockFilter,
    Charge,
    CSTableau,
    RootElement,
    Structure,
    bruhat_leq,
    columns,
    enumerate_block,
    ground_state,
    is_restricted,
    is_reverse_restricted,
    pairing_a,
    tableau_from_columns,
    transpose,
    truncation_level,
)

__all__ = [
    "Report",
    "FockVector",
    "HWVector",
    "BasisBundle",
    "BlockMismatch",
    "block_labels",
    "order_for",
    "target_alpha",
    "chevalley_matrix",
    "divided_power_matrix",
    "build_basis_bundle",
    "verify_bar_compatibility",
    "project_to_v",
    "shapovalov_gram",
    "shapovalov",
    "contravariant_gram",
    "contravariant",
    "check_relations",
    "check_maincb",
    "check_dca_leading_terms",
    "decomposition_matrix_q1",
    "check_transpose_theorem",
    "check_twisted_quasicanonical",
    "check_pairings",
    "check_contravariant_lemma",
    "highest_weight_span",
]

Q = LaurentPoly.q()


class BlockMismatch(ValueError):
    pass


# -- blocks and generators ----------------------------------------------------


@lru_cache(maxsize=None)
def block_labels(charge: Charge, alpha: RootElement) -> tuple[CSTableau, ...]:
    return tuple(enumerate_block(charge, alpha))


def order_for(structure: Structure) -> Callable[[CSTableau, CSTableau], bool]:
    if structure is Structure.STANDARD:
        return bruhat_leq
    return lambda a, b: bruhat_leq(b, a)


def target_alpha(gen: str, i: int, alpha: Mapping[int, int]) -> RootElement:
    alpha = RootElement(alpha)
    if gen == "F":
        return alpha.plus_simple(i, 1)
    if gen == "E":
        return alpha.plus_simple(i, -1)
    if gen == "D":
        return alpha
    raise ValueError(f"unknown generator {gen!r}")


def _counts(cols, x):
    return [1 if x in c else 0 for c in cols]


@lru_cache(maxsize=None)
def chevalley_matrix(gen: str, i: int, charge: Charge, alpha: RootElement,
                     structure: Structure = Structure.STANDARD) -> PolyMatrix:
    """Matrix of ``E_i``, ``F_i`` or ``D_i`` from block ``alpha`` to its target block.

    Rows are target labels, columns source labels.  Uses the closed form of
    the iterated coproduct on tensor products of wedges.
    """
    alpha = RootElement(alpha)
    src = block_labels(charge, alpha)
    tgt_alpha = target_alpha(gen, i, alpha)
    ok_target = tgt_alpha.is_nonnegative() and all(r in charge.index_set for r in tgt_alpha)
    if gen == "F" and i not in charge.index_set:
        ok_target = False
    tgt = block_labels(charge, tgt_alpha) if ok_target else ()
    out = PolyMatrix(tgt, src)
    if not tgt or not src:
        return out
    level = min(truncation_level(charge, alpha), truncation_level(charge, tgt_alpha), i)
    lo = charge.index_set.min
    if lo is not None:
        level = max(level, lo)
    rev = structure is Structure.REVERSE
    tpos = {t: n for n, t in enumerate(tgt)}
    for col_idx, a in enumerate(src):
        cols = columns(a, level)
        ni, ni1 = _counts(cols, i), _counts(cols, i + 1)
        if gen == "D":
            # entries below the level are ground and never equal i (level <= i)
            out.entries[tpos[a]][col_idx] = Q ** sum(ni)
            continue
        l = len(cols)
        for j in range(l):
            if gen == "F" and ni[j] and not ni1[j]:
                others = range(j + 1, l) if rev else range(j)
                e = sum(ni1[c] - ni[c] for c in others)
                old, new = i, i + 1
            elif gen == "E" and ni1[j] and not ni[j]:
                others = range(j) if rev else range(j + 1, l)
                e = sum(ni[c] - ni1[c] for c in others)
                old, new = i + 1, i
            else:
                continue
            newcols = list(cols)
            newcols[j] = tuple(new if x == old else x for x in cols[j])
            b = tableau_from_columns(charge, newcols, level)
            r = tpos[b]
            out.entries[r][col_idx] = out.entries[r][col_idx] + Q ** e
    return out


def divided_power_matrix(gen: str, i: int, r: int, charge: Charge, alpha: RootElement,
                         structure: Structure = Structure.STANDARD) -> PolyMatrix:
    """``E_i^(r)`` or ``F_i^(r)``: the r-fold product divided exactly by ``[r]!``."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    alpha = RootElement(alpha)
    labels = block_labels(charge, alpha)
    prod = PolyMatrix.identity(labels)
    cur = alpha
    for _ in range(r):
        step = chevalley_matrix(gen, i, charge, cur, structure)
        if not step.rows:
            return PolyMatrix((), labels)
        prod = step @ prod
        cur = target_alpha(gen, i, cur)
    fact = quantum_factorial(r)
    return prod.map(lambda x: x.exact_div(fact) if x else x)


# -- bundles ------------------------------------------------------------------


@dataclass
class BasisBundle:
    charge: Charge
    alpha: RootElement
    structure: Structure
    labels: tuple[CSTableau, ...]
    p: PolyMatrix
    d: PolyMatrix
    bar: BarSemilinearMap
    L: PolyMatrix
    T: PolyMatrix
    Pq: PolyMatrix

    @property
    def leq(self):
        return order_for(self.structure)

    @property
    def standard(self) -> list[CSTableau]:
        return [a for a in self.labels if is_restricted(a)]

    @property
    def reverse(self) -> list[CSTableau]:
        return [a for a in self.labels if is_reverse_restricted(a)]

    @property
    def a(self) -> int:
        return pairing_a(self.charge, self.alpha)

    def matrix(self, which: str) -> PolyMatrix:
        return {"p": self.p, "d": self.d, "bar": self.bar.matrix, "L": self.L, "T": self.T, "P": self.Pq}[which]


_BUNDLES: dict = {}


def build_basis_bundle(charge: Charge, alpha: Mapping[int, int], structure: Structure = Structure.STANDARD,
                       cache: KLCache | None = None) -> BasisBundle:
    alpha = RootElement(alpha)
    key = (charge, alpha, structure, id(cache))
    if key in _BUNDLES:
        return _BUNDLES[key]
    labels = block_labels(charge, alpha)
    if not labels:
        raise BlockMismatch(f"block {alpha.label()} is empty for charge {charge}")
    leq = order_for(structure)
    level = truncation_level(charge, alpha)
    p = PolyMatrix(labels, labels)
    for a, b in itertools.product(labels, labels):
        p[a, b] = parabolic_kl(a, b, structure, cache, level)
    L = p.map(LaurentPoly.subs_neg)
    d = invert_unitriangular(L, leq)
    bar = BarSemilinearMap(L @ d.conj())
    T = lusztig_solve(bar, leq, Lattice.ABOVE)
    bundle = BasisBundle(charge, alpha, structure, labels, p, d, bar, L, T, d.transpose())
    if cache is not None:
        cache.flush()
    _BUNDLES[key] = bundle
    return bundle


def verify_bar_compatibility(bundle: BasisBundle, generators: Iterable[int],
                             cache: KLCache | None = None, targets: Mapping | None = None) -> Report:
    """Check ``bar_t . conj(X) = X . bar_s`` for ``X`` in ``E_i``, ``F_i``."""
    rep = Report(f"bar-compatibility {bundle.alpha.label()}")
    for i in generators:
        for gen in ("E", "F"):
            x = chevalley_matrix(gen, i, bundle.charge, bundle.alpha, bundle.structure)
            if not x.rows:
                continue
            t_alpha = target_alpha(gen, i, bundle.alpha)
            tb = (targets or {}).get(t_alpha) or build_basis_bundle(bundle.charge, t_alpha, bundle.structure, cache)
            lhs = tb.bar.matrix @ x.conj()
            rhs = x @ bundle.bar.matrix
            rep.checked += 1
            for r, c, v in (lhs - rhs).nonzero_items():
                rep.fail(f"{gen}_{i}: entry ({r}, {c}) differs by {v}")
                break
    return rep


# -- vectors and forms --------------------------------------------------------


@dataclass
class FockVector:
    charge: Charge
    structure: Structure
    coeffs: dict = field(default_factory=dict)
    mixed: bool = False

    @classmethod
    def monomial(cls, t: CSTableau, structure: Structure = Structure.STANDARD) -> "FockVector":
        return cls(t.charge, structure, {t: ONE})

    @classmethod
    def from_column(cls, m: PolyMatrix, label, charge: Charge, structure: Structure) -> "FockVector":
        return cls(charge, structure, m.column(label))

    def vector(self, labels) -> list[LaurentPoly]:
        extra = set(self.coeffs) - set(labels)
        if extra:
            raise BlockMismatch(f"vector has support outside the block: {sorted(map(str, extra))[:3]}")
        return [self.coeffs.get(a, ZERO) for a in labels]


@dataclass
class HWVector:
    """Element of ``V(Lambda)`` in dual-canonical coordinates ``D_A``."""

    charge: Charge
    coeffs: dict = field(default_factory=dict)


def project_to_v(vec: FockVector, bundle: BasisBundle) -> HWVector:
    """``pi``: expand in the ``L`` basis and keep the standard labels."""
    if vec.structure is not bundle.structure or bundle.structure is not Structure.STANDARD:
        raise BlockMismatch("projection is defined on the standard Fock space")
    c = vec.vector(bundle.labels)
    out = {}
    for a in bundle.labels:
        if not is_restricted(a):
            continue
        x = ZERO
        for b, cb in zip(bundle.labels, c):
            if cb:
                x = x + bundle.d[a, b] * cb
        if x:
            out[a] = x
    return HWVector(bundle.charge, out)


def shapovalov_gram(bundle: BasisBundle) -> PolyMatrix:
    """``G`` with ``<x, y> = conj(x)^T G y``; forced by ``<M_A, bar M_B> = delta``."""
    return bundle.bar.matrix.conj()


def _pair(x: list, g: PolyMatrix, y: list, conj_x: bool) -> LaurentPoly:
    acc = ZERO
    for i, xi in enumerate(x):
        if not xi:
            continue
        xi = xi.bar() if conj_x else xi
        row = g.entries[i]
        for j, yj in enumerate(y):
            if yj and row[j]:
                acc = acc + xi * row[j] * yj
    return acc


def shapovalov(x: FockVector, y: FockVector, bundle: BasisBundle) -> LaurentPoly:
    return _pair(x.vector(bundle.labels), shapovalov_gram(bundle), y.vector(bundle.labels), True)


def contravariant_gram(bundle_f: BasisBundle) -> PolyMatrix:
    """``C`` with ``(x~, y) = x~^T C y``; forced by ``(M~_A, bar M_B) = delta``."""
    return bundle_f.bar.matrix.conj()


def contravariant(xt: FockVector, y: FockVector, bundle_f: BasisBundle) -> LaurentPoly:
    if xt.structure is not Structure.REVERSE or y.structure is not Structure.STANDARD:
        raise BlockMismatch("contravariant form pairs the reverse space with the standard one")
    return _pair(xt.vector(bundle_f.labels), contravariant_gram(bundle_f), y.vector(bundle_f.labels), False)


# -- checks -------------------------------------------------------------------


def _diag(labels, fn) -> PolyMatrix:
    m = PolyMatrix(labels, labels)
    for a in labels:
        m[a, a] = fn(a)
    return m


def _n(a: CSTableau, x: int, level: int) -> int:
    return sum(1 for c in columns(a, level) if x in c)


def check_relations(charge: Charge, alpha: Mapping[int, int], indices: Iterable[int],
                    structure: Structure = Structure.STANDARD) -> Report:
    """Defining relations of ``U`` as matrix identities starting from block ``alpha``."""
    alpha = RootElement(alpha)
    indices = sorted(set(indices))
    rep = Report(f"relations {alpha.label()}")
    labels = block_labels(charge, alpha)
    if not labels:
        return rep

    def mat(gen, i, a):
        return chevalley_matrix(gen, i, charge, a, structure)

    def path(word, a):
        # word applied right-to-left: word[-1] acts first
        m = PolyMatrix.identity(labels)
        cur = a
        for gen, i in reversed(word):
            step = mat(gen, i, cur)
            if not step.rows:
                return None, target_alpha(gen, i, cur)
            m = step @ m
            cur = target_alpha(gen, i, cur)
        return m, cur

    def combo(terms):
        acc = None
        for coeff, word in terms:
            m, _ = path(word, alpha)
            if m is None:
                continue
            m = m.scale(coeff)
            acc = m if acc is None else acc + m
        return acc

    def expect_zero(name, m):
        rep.checked += 1
        if m is not None and not m.is_zero():
            a, b, v = next(m.nonzero_items())
            rep.fail(f"{name}: entry ({a}, {b}) = {v}")

    level = min(truncation_level(charge, alpha), min(indices))
    if charge.index_set.min is not None:
        level = max(level, charge.index_set.min)
    two = quantum_integer(2)
    for i in indices:
        for j in indices:
            comm = combo([(ONE, [("E", i), ("F", j)]), (-ONE, [("F", j), ("E", i)])])
            if i == j:
                rhs = _diag(labels, lambda a: quantum_integer(_n(a, i, level) - _n(a, i + 1, level)))
                comm = rhs.scale(-ONE) if comm is None else comm - rhs
            expect_zero(f"[E_{i},F_{j}]", comm)
            for gen in ("E", "F"):
                if abs(i - j) == 1:
                    serre = combo([(ONE, [(gen, i), (gen, i), (gen, j)]), (-two, [(gen, i), (gen, j), (gen, i)]),
                                   (ONE, [(gen, j), (gen, i), (gen, i)])])
                    expect_zero(f"Serre {gen}_{i},{gen}_{j}", serre)
                elif abs(i - j) > 1:
                    expect_zero(f"{gen}_{i}{gen}_{j} commute", combo([(ONE, [(gen, i), (gen, j)]), (-ONE, [(gen, j), (gen, i)])]))
            # D_i X_j = q^{<..>} X_j D_i
            for gen, sgn in (("E", 1), ("F", -1)):
                e = sgn * ((1 if i == j else 0) - (1 if i == j + 1 else 0))
                expect_zero(f"D_{i} {gen}_{j}", combo([(ONE, [("D", i), (gen, j)]), (-Q ** e, [(gen, j), ("D", i)])]))
    return rep


def check_maincb(bundle: BasisBundle, t_columns: Mapping | None = None) -> Report:
    """``P_A = q^a T_{A_up}`` and the support and degree bounds on ``d_{A,B}``."""
    rep = Report(f"maincb {bundle.alpha.label()}")
    a = bundle.a
    qa = Q ** a
    leq = bruhat_leq
    for A in bundle.standard:
        up = rectify_up(A)
        t_col = (t_columns or {}).get(up, bundle.T.column(up))
        p_col = bundle.Pq.column(A)
        rep.checked += 1
        want = {b: v * qa for b, v in t_col.items()}
        if want != p_col:
            rep.fail(f"P_{A} != q^{a} T_{up}")
            continue
        for B in bundle.labels:
            v = bundle.d[A, B]
            if not (leq(A, B) and leq(B, up)):
                if v:
                    rep.fail(f"d[{A}, {B}] = {v} outside [A, A_up]")
            elif B == A:
                if v != ONE:
                    rep.fail(f"d[{A}, {A}] = {v}")
            elif B == up:
                if v != qa:
                    rep.fail(f"d[{A}, {up}] = {v}, expected q^{a}")
            elif v and (v.min_degree() < 1 or v.max_degree() > a - 1):
                rep.fail(f"d[{A}, {B}] = {v} outside qZ[q] and q^{a - 1}Z[q^-1]")
    return rep


def check_dca_leading_terms(bundle: BasisBundle, i: int, cache: KLCache | None = None) -> Report:
    """Leading terms of ``E_i L_A`` and ``F_i L_A`` expanded in the target ``L`` basis."""
    rep = Report(f"dca {bundle.alpha.label()} i={i}")
    st = bundle.structure
    for gen in ("E", "F"):
        x = chevalley_matrix(gen, i, bundle.charge, bundle.alpha, st)
        if not x.rows:
            # empty target: every E_i L_A is zero, so e~_i must be absent everywhere
            for A in bundle.labels:
                rep.checked += 1
                op = e_tilde if gen == "E" else f_tilde
                if op(A, i, st) is not None:
                    rep.fail(f"{gen}_{i} L_{A} = 0 but crystal operator is defined")
            continue
        tb = build_basis_bundle(bundle.charge, target_alpha(gen, i, bundle.alpha), st, cache)
        coords = tb.d @ x @ bundle.L
        for A in bundle.labels:
            rep.checked += 1
            sig = signature(A, i, st)
            k = sig.eps if gen == "E" else sig.phi
            lead = (e_tilde if gen == "E" else f_tilde)(A, i, st)
            col = coords.column(A)
            if lead is not None:
                if col.get(lead, ZERO) != quantum_integer(k):
                    rep.fail(f"{gen}_{i} L_{A}: coefficient of L_{lead} is {col.get(lead, ZERO)}, expected [{k}]")
                    continue
            for B, v in col.items():
                if B == lead:
                    continue
                sb = signature(B, i, st)
                kb = sb.eps if gen == "E" else sb.phi
                if not kb < k - 1:
                    rep.fail(f"{gen}_{i} L_{A}: term L_{B} with statistic {kb} not below {k - 1}")
                elif v.bar() != v or v.max_degree() > k - 2:
                    rep.fail(f"{gen}_{i} L_{A}: coefficient {v} of L_{B} not bar-invariant in q^{k - 2}Z[q^-1]")
    return rep


def decomposition_matrix_q1(charge: Charge, alpha: Mapping[int, int], cache: KLCache | None = None):
    """``d_{A,B}(1)`` with rows the standard labels and columns all labels."""
    b = build_basis_bundle(charge, alpha, Structure.STANDARD, cache)
    rows = b.standard
    return rows, list(b.labels), [[b.d[a, c].at_one() for c in b.labels] for a in rows]


def check_transpose_theorem(charge: Charge, alpha: Mapping[int, int], cache: KLCache | None = None) -> Report:
    """Rev -> Std^t bijection and ``d^t_{A^t,B^t}(1) = d_{A_down,B}(1)``."""
    alpha = RootElement(alpha)
    rep = Report(f"transpose {alpha.label()}")
    ct = charge.transpose()
    at = alpha.negate_residues()
    rev = enumerate_block(charge, alpha, BlockFilter.REVERSE)
    std_t = enumerate_block(ct, at, BlockFilter.STANDARD)
    images = [transpose(a) for a in rev]
    rep.checked += 1
    if sorted(images) != sorted(std_t) or len(set(images)) != len(images):
        return rep.fail(f"transpose does not biject Rev onto Std^t ({len(rev)} vs {len(std_t)})")
    if not rev:
        return rep
    b = build_basis_bundle(charge, alpha, Structure.STANDARD, cache)
    bt = build_basis_bundle(ct, at, Structure.STANDARD, cache)
    for A in rev:
        down = rectify_down(A)
        for B in b.labels:
            rep.checked += 1
            lhs = bt.d[transpose(A), transpose(B)].at_one()
            rhs = b.d[down, B].at_one()
            if lhs != rhs:
                rep.fail(f"d^t[{transpose(A)}, {transpose(B)}](1) = {lhs} but d[{down}, {B}](1) = {rhs}")
    return rep


# -- highest-weight submodule and the twisted space ---------------------------


def _sequences(alpha: RootElement):
    items = [i for i, c in alpha.items() for _ in range(c)]
    return sorted(set(itertools.permutations(items)))


def highest_weight_span(charge: Charge, alpha: Mapping[int, int], structure: Structure) -> tuple[list, list]:
    """Vectors ``F_{i_h} ... F_{i_1} v_Lambda`` for every residue sequence of ``alpha``."""
    alpha = RootElement(alpha)
    ground = ground_state(charge)
    seqs, vecs = [], []
    for seq in _sequences(alpha):
        cur = RootElement()
        v = {ground: ONE}
        for i in seq:
            m = chevalley_matrix("F", i, charge, cur, structure)
            cur = target_alpha("F", i, cur)
            nv: dict = {}
            for src, c in v.items():
                for tgt, x in m.column(src).items():
                    nv[tgt] = nv.get(tgt, ZERO) + x * c
            v = {k: x for k, x in nv.items() if x}
            if not v:
                break
        if v:
            seqs.append(seq)
            vecs.append(v)
    return seqs, vecs


class _Transfer:
    """The module isomorphism from ``V`` inside ``F`` to ``V`` inside ``F~``."""

    def __init__(self, charge: Charge, alpha: RootElement):
        from . import qfield

        self.qf = qfield
        self.labels = block_labels(charge, alpha)
        seqs, vf = highest_weight_span(charge, alpha, Structure.STANDARD)
        seqs_t, vt = highest_weight_span(charge, alpha, Structure.REVERSE)
        both = sorted(set(seqs) | set(seqs_t))
        get_f, get_t = dict(zip(seqs, vf)), dict(zip(seqs_t, vt))
        cols_f = [[get_f.get(s, {}).get(a, ZERO) for a in self.labels] for s in both]
        cols_t = [[get_t.get(s, {}).get(a, ZERO) for a in self.labels] for s in both]
        if not both:
            self.basis_f = None
            return
        xf = qfield.column_matrix(cols_f)
        piv = qfield.independent_columns(xf)
        self.basis_f = qfield.column_matrix([cols_f[k] for k in piv])
        self.basis_t = qfield.column_matrix([cols_t[k] for k in piv])
        self.rank = len(piv)

    def __call__(self, vec: list[LaurentPoly]):
        """Image in ``F~`` coordinates (field elements), or None if ``vec`` is not in ``V``."""
        qf = self.qf
        if self.basis_f is None:
            return None
        c = qf.solve_in_span(self.basis_f, qf.column_matrix([vec]))
        if c is None:
            return None
        col = qf.DomainMatrix([[x] for x in c], (len(c), 1), qf.K)
        img = self.basis_t.matmul(col).to_Matrix()
        return [qf.K.from_sympy(img[k, 0]) for k in range(len(self.labels))]


def check_twisted_quasicanonical(charge: Charge, alpha: Mapping[int, int], cache: KLCache | None = None,
                                 down: Callable[[CSTableau], CSTableau] | None = None) -> Report:
    """``P~_A = P_{A_down}`` for reverse-standard ``A``, compared inside ``V(Lambda)``.

    ``P_{A_down}`` lives in ``F``; it is carried to ``F~`` by the module
    isomorphism fixing the highest weight vector, built from matching
    ``F``-monomials in both spaces, and compared with ``P~_A`` exactly over
    ``Q(q)``.  ``down`` overrides the rectification map (negative controls).
    """
    alpha = RootElement(alpha)
    rep = Report(f"twisted {alpha.label()}")
    down = down or rectify_down
    bf = build_basis_bundle(charge, alpha, Structure.STANDARD, cache)
    bt = build_basis_bundle(charge, alpha, Structure.REVERSE, cache)
    psi = _Transfer(charge, alpha)
    qf = psi.qf
    for A in bt.reverse:
        rep.checked += 1
        p_down = [bf.Pq[b, down(A)] for b in bf.labels]
        img = psi(p_down)
        if img is None:
            rep.fail(f"P_{down(A)} is not in the highest-weight submodule")
            continue
        want = [qf.to_field(bt.Pq[b, A]) for b in bt.labels]
        if img != want:
            rep.fail(f"P~_{A} differs from the transfer of P_{down(A)}")
    return rep


def check_pairings(charge: Charge, alpha: Mapping[int, int], cache: KLCache | None = None,
                   generators: Iterable[int] = ()) -> Report:
    """``<P_A, L_B> = delta``, ``(L~_A, T_B) = delta`` and the adjointness identities."""
    alpha = RootElement(alpha)
    rep = Report(f"pairings {alpha.label()}")
    bf = build_basis_bundle(charge, alpha, Structure.STANDARD, cache)
    bt = build_basis_bundle(charge, alpha, Structure.REVERSE, cache)
    G = shapovalov_gram(bf)
    C = contravariant_gram(bf)
    doe = bf.Pq.conj().transpose() @ G @ bf.L
    rep.checked += 1
    if not doe.is_identity():
        a, b, v = next((x for x in (doe - PolyMatrix.identity(bf.labels)).nonzero_items()))
        rep.fail(f"<P_{a}, L_{b}> - delta = {v}")
    lt = bt.L.transpose() @ C @ bf.T
    rep.checked += 1
    if not lt.is_identity():
        a, b, v = next((x for x in (lt - PolyMatrix.identity(bf.labels)).nonzero_items()))
        rep.fail(f"(L~_{a}, T_{b}) - delta = {v}")
    for i in generators:
        f = chevalley_matrix("F", i, charge, alpha, Structure.STANDARD)
        if not f.rows:
            continue
        t_alpha = target_alpha("F", i, alpha)
        bf_t = build_basis_bundle(charge, t_alpha, Structure.STANDARD, cache)
        e = chevalley_matrix("E", i, charge, t_alpha, Structure.STANDARD)
        level = min(truncation_level(charge, alpha), i)
        k = _diag(bf.labels, lambda a: Q ** (_n(a, i, level) - _n(a, i + 1, level) - 1))
        rep.checked += 1
        lhs = f.conj().transpose() @ shapovalov_gram(bf_t)
        rhs = G @ k @ e
        if lhs != rhs:
            rep.fail(f"<F_{i} x, y> != <x, tau(F_{i}) y>")
        ft = chevalley_matrix("F", i, charge, alpha, Structure.REVERSE)
        rep.checked += 1
        if ft.transpose() @ contravariant_gram(bf_t) != C @ e:
            rep.fail(f"(F_{i} x, y) != (x, E_{i} y)")
    return rep


def check_contravariant_lemma(charge: Charge, alpha: Mapping[int, int], cache: KLCache | None = None) -> Report:
    """On ``V``: ``<v,w> = q^a (bar v, w)`` and ``(v,w) = bar((bar w, bar v))``.

    The contravariant form on ``V`` pairs ``psi(v)`` with ``w``, where ``psi``
    carries ``V`` inside ``F`` to ``V`` inside ``F~``.
    """
    alpha = RootElement(alpha)
    rep = Report(f"contra2 {alpha.label()}")
    bf = build_basis_bundle(charge, alpha, Structure.STANDARD, cache)
    psi = _Transfer(charge, alpha)
    qf = psi.qf
    G, C, barm = shapovalov_gram(bf), contravariant_gram(bf), bf.bar.matrix
    labels = bf.labels
    basis = [[bf.Pq[b, A] for b in labels] for A in bf.standard]

    def bar_vec(v):
        return [sum((barm[r, c] * v[k].bar() for k, c in enumerate(labels)), ZERO) for r in labels]

    def contra(v, w):
        img = psi(v)
        if img is None:
            raise BlockMismatch("vector outside the highest-weight submodule")
        acc = qf.K.zero
        for k, x in enumerate(img):
            for j, y in enumerate(w):
                if y and C.entries[k][j]:
                    acc = acc + x * qf.to_field(C.entries[k][j] * y)
        return acc

    qa = qf.to_field(Q ** bf.a)
    for v, w in itertools.product(basis, basis):
        rep.checked += 1
        sh = qf.to_field(_pair(v, G, w, True))
        if sh != qa * contra(bar_vec(v), w):
            rep.fail("<v,w> != q^a (bar v, w)")
            break
        if contra(v, w) != qf.field_bar(contra(bar_vec(w), bar_vec(v))):
            rep.fail("(v,w) != bar((bar w, bar v))")
            break
    return rep
