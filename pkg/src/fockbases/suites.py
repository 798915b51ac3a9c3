"""Named verification suites.  The CLI and the acceptance tests both call these."""

from __future__ import annotations

import itertools
from typing import Iterable

from .crystal import crystal_component, rectify_down, rectify_up, signature
from .fock import (
    build_basis_bundle,
    check_contravariant_lemma,
    check_dca_leading_terms,
    check_maincb,
    check_pairings,
    check_relations,
    check_transpose_theorem,
    check_twisted_quasicanonical,
    verify_bar_compatibility,
)
from .hecke import DeskBoundExceeded, block_split, check_dimension, consistency_check, desk_bound, formal_character, specht_module
from .kl import KLCache, bruhat_leq_perm, interval, kl_polynomial, length, r_polynomial
from .laurent import ZERO
from .report import Report
from .weights import (
    BlockFilter,
    Charge,
    IndexSet,
    RootElement,
    Structure,
    addable_nodes,
    blocks_up_to,
    enumerate_block,
    removable_nodes,
    residue,
    tableau_from_columns,
)

SUITES = ("core", "fock", "hecke", "transpose", "all")

# (A, A_down) for charge (3,2) over Z>=1, columns listed top to bottom
RECTIFICATION_GOLDENS = [
    (((5, 4, 3), (2, 1)), ((5, 2, 1), (4, 3))),
    (((5, 4, 2), (3, 1)), ((5, 3, 1), (4, 2))),
    (((5, 3, 1), (4, 2)), ((4, 2, 1), (5, 3))),
    (((5, 4, 1), (3, 2)), ((3, 2, 1), (5, 4))),
    (((5, 3, 2), (4, 1)), ((4, 3, 1), (5, 2))),
]


def check_rectification_goldens() -> Report:
    rep = Report("rectification goldens")
    charge = Charge((3, 2), IndexSet(1))
    for src, dst in RECTIFICATION_GOLDENS:
        a = tableau_from_columns(charge, src, 1)
        b = tableau_from_columns(charge, dst, 1)
        rep.checked += 2
        got = rectify_down(a)
        if got != b:
            rep.fail(f"rectify_down{src} = {got}, expected {b}")
        back = rectify_up(b)
        if back != a:
            rep.fail(f"rectify_up{dst} = {back}, expected {a}")
    return rep


def check_rectification_bijection(charge: Charge, max_height: int) -> Report:
    rep = Report(f"rectification bijection {charge}")
    for alpha in blocks_up_to(charge, max_height):
        rev = enumerate_block(charge, alpha, BlockFilter.REVERSE)
        std = enumerate_block(charge, alpha, BlockFilter.STANDARD)
        images = [rectify_down(a) for a in rev]
        rep.checked += 1
        if sorted(images) != std:
            rep.fail(f"rectify_down(Rev) != Std on {alpha.label()}")
            continue
        for a in rev:
            rep.checked += 1
            if rectify_up(rectify_down(a)) != a:
                rep.fail(f"rectify_up(rectify_down({a})) != {a}")
    return rep


def check_level_one(charge: Charge, max_height: int, cache: KLCache | None = None) -> Report:
    rep = Report(f"level one {charge}")
    if charge.level != 1:
        return rep
    for alpha in blocks_up_to(charge, max_height):
        if not alpha:
            continue
        b = build_basis_bundle(charge, alpha, Structure.STANDARD, cache)
        rep.checked += 1
        if len(b.labels) != 1:
            rep.fail(f"block {alpha.label()} has {len(b.labels)} labels")
            continue
        for which in ("p", "d", "bar", "L", "T", "P"):
            rep.checked += 1
            if not b.matrix(which).is_identity():
                rep.fail(f"{which} is not the identity on {alpha.label()}")
    return rep


def check_crystal(charge: Charge, max_height: int) -> Report:
    """Component = Std (resp. Rev), and ``phi - eps = (wt, alpha_i)``."""
    rep = Report(f"crystal {charge}")
    blocks = blocks_up_to(charge, max_height)
    for structure, filt in ((Structure.STANDARD, BlockFilter.STANDARD), (Structure.REVERSE, BlockFilter.REVERSE)):
        g = crystal_component(charge, structure, max_height)
        expected = sorted(t for a in blocks for t in enumerate_block(charge, a, filt))
        rep.checked += 1
        if sorted(g.vertices) != expected:
            rep.fail(f"{structure.value} component has {len(g.vertices)} vertices, expected {len(expected)}")
    for alpha in blocks:
        for t in enumerate_block(charge, alpha):
            for i in sorted({residue(charge, *n) for n in addable_nodes(t.mp) + removable_nodes(t.mp)}):
                pairing = sum(1 for m in charge.charges if m == i) - 2 * alpha[i] + alpha[i - 1] + alpha[i + 1]
                for structure in Structure:
                    sig = signature(t, i, structure)
                    rep.checked += 1
                    if sig.phi - sig.eps != pairing:
                        rep.fail(f"phi - eps = {sig.phi - sig.eps} != {pairing} at {t}, i={i}")
    return rep


def check_kl_identities(n: int) -> Report:
    """R/KL inversion identity, degree bounds and short intervals on ``S_n``."""
    rep = Report(f"kl identities S_{n}")
    perms = list(itertools.permutations(range(1, n + 1)))
    for x, y in itertools.product(perms, perms):
        p = kl_polynomial(x, y)
        rep.checked += 1
        if not bruhat_leq_perm(x, y):
            if p != ZERO:
                rep.fail(f"P({x},{y}) = {p} but x is not below y")
            continue
        gap = length(y) - length(x)
        rhs = ZERO
        for z in interval(x, y):
            rhs = rhs + r_polynomial(x, z) * kl_polynomial(z, y)
        if p.bar().shift(gap) != rhs:
            rep.fail(f"inversion identity fails at ({x},{y})")
        if p.coeff(0) != 1:
            rep.fail(f"P({x},{y}) has constant term {p.coeff(0)}")
        if x != y and 2 * p.max_degree() > gap - 1:
            rep.fail(f"degree bound fails at ({x},{y}): {p}")
        if gap <= 2 and str(p) != "1":
            rep.fail(f"short interval ({x},{y}) has P = {p}")
    return rep


def _generators(charge: Charge) -> list[int]:
    lo, hi = min(charge.charges) - 1, max(charge.charges) + 1
    return [i for i in range(lo, hi + 1) if i in charge.index_set]


def _blocks(charge: Charge, max_height: int) -> list[RootElement]:
    return [a for a in blocks_up_to(charge, max_height) if a]


def suite_core(charge: Charge, max_height: int, cache=None) -> list[Report]:
    out = [check_rectification_goldens(), check_crystal(charge, max_height)]
    if charge.level == 1:
        out.append(check_level_one(charge, max_height, cache))
    out.append(check_kl_identities(4))
    return out


def suite_fock(charge: Charge, max_height: int, cache=None) -> list[Report]:
    gens = _generators(charge)
    out = []
    for alpha in _blocks(charge, max_height):
        b = build_basis_bundle(charge, alpha, Structure.STANDARD, cache)
        out.append(check_relations(charge, alpha, gens))
        out.append(verify_bar_compatibility(b, gens, cache))
        out.append(check_maincb(b))
        out.append(check_pairings(charge, alpha, cache, gens))
        if alpha.height <= 3:
            for i in gens:
                out.append(check_dca_leading_terms(b, i, cache))
        out.append(check_twisted_quasicanonical(charge, alpha, cache))
        out.append(check_contravariant_lemma(charge, alpha, cache))
    return out


def suite_hecke(charge: Charge, max_height: int, cache=None) -> list[Report]:
    out = []
    bound = desk_bound()
    for d in range(1, min(max_height, 3) + 1):
        rep = Report(f"hecke dimension l={charge.level} d={d}")
        if charge.level * _fact(d) * charge.level ** d > bound:
            out.append(rep)
            continue
        ok, dim = check_dimension(charge.charges, d)
        rep.checked += 1
        rep.details = {"dimension": dim}
        if not ok:
            rep.fail(f"regular action fails or dimension {dim} != l^d d!")
        out.append(rep)
        for alpha in block_split(charge, d):
            rep = Report(f"hecke consistency {alpha.label()}")
            try:
                res = consistency_check(charge, alpha, cache)
            except DeskBoundExceeded:
                out.append(rep)
                continue
            rep.checked += len(res.characters)
            if not res.passed:
                rep.fail(res.witness)
            for t in res.characters:
                rep.checked += 1
                if formal_character(specht_module(t, reverse=True)) != res.characters[t]:
                    rep.fail(f"ch S~({t}) != ch S({t})")
                if specht_module(t).center_failures():
                    rep.fail(f"symmetric polynomials are not central on S({t})")
            out.append(rep)
    return out


def suite_transpose(charge: Charge, max_height: int, cache=None) -> list[Report]:
    return [check_transpose_theorem(charge, alpha, cache) for alpha in _blocks(charge, max_height)]


def _fact(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def run_suite(name: str, charge: Charge, max_height: int, cache: KLCache | None = None) -> list[Report]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    names = ["core", "fock", "hecke", "transpose"] if name == "all" else [name]
    table = {"core": suite_core, "fock": suite_fock, "hecke": suite_hecke, "transpose": suite_transpose}
    reports = []
    for n in names:
        reports.extend(table[n](charge, max_height, cache))
    return sorted(reports, key=lambda r: r.name)
