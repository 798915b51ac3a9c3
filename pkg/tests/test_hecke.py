import copy

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fockbases.fock import decomposition_matrix_q1
from fockbases.hecke import (
    DeskBoundExceeded,
    FormalCharacter,
    HeckeAlgebra,
    HeckeModule,
    NonIntegerEigenvalue,
    RelationFailure,
    block_split,
    check_dimension,
    consistency_check,
    formal_character,
    seminormal_module,
    specht_module,
)
from fockbases.weights import Charge, CSTableau, IndexSet, Multipartition, RootElement

C10 = Charge((1, 0))


def mp(charge, *parts):
    return CSTableau(Multipartition(tuple(tuple(p) for p in parts)), charge)


def test_commutation_relations():
    h = HeckeAlgebra((1, 0), 2)
    lhs = h.mul(h.s(1), h.x(2))
    rhs = h.mul(h.x(1), h.s(1))
    rhs[((0, 0), (1, 2))] = rhs.get(((0, 0), (1, 2)), 0) + 1
    assert lhs == rhs
    assert h.mul(h.s(1), h.s(1)) == h.one()


def test_cyclotomic_reduction():
    h = HeckeAlgebra((1, 0), 2)
    # x_1^2 = x_1 because (x_1 - 1) x_1 = 0
    assert h.mul(h.x(1), h.x(1)) == h.x(1)
    h3 = HeckeAlgebra((2, -1, 0), 1)
    x = h3.x(1)
    cube = h3.mul(h3.mul(x, x), x)
    # (x - 2)(x + 1) x = x^3 - x^2 - 2x
    assert cube == {((2,), (1,)): 1, ((1,), (1,)): 2}


@pytest.mark.parametrize("charges,d", [((0,), 3), ((1, 0), 2), ((1, 0), 3), ((2, 0), 2)])
def test_algebra_dimension(charges, d):
    ok, dim = check_dimension(charges, d)
    assert ok and dim == len(charges) ** d * [1, 1, 2, 6][d]


def _elements(h):
    basis = h.basis()
    return st.dictionaries(st.sampled_from(basis), st.integers(-3, 3).filter(bool), min_size=1, max_size=3)


H22 = HeckeAlgebra((1, 0), 2)


@settings(max_examples=60, deadline=None)
@given(_elements(H22), _elements(H22), _elements(H22))
def test_associativity(a, b, c):
    assert H22.mul(H22.mul(a, b), c) == H22.mul(a, H22.mul(b, c))


def test_seminormal_modules():
    triv = seminormal_module((3,), 2)
    assert triv.dim == 1
    assert [m.to_list()[0][0] for m in triv.s] == [1, 1]
    assert [m.to_list()[0][0] for m in triv.x] == [2, 3, 4]
    for shape in [(2, 1), (3, 1), (2, 2), (2, 1, 1), (3, 2)]:
        m = seminormal_module(shape, 0)
        assert not m.relation_failures(cyclotomic=False)


def test_trivial_character():
    ch = formal_character(seminormal_module((2,), 0))
    assert ch.weights == {(0, 1): 1}


def test_specht_dimensions():
    assert specht_module(mp(C10, (1,), (1,))).dim == 2
    assert specht_module(mp(C10, (2,), (1,))).dim == 3
    assert specht_module(mp(C10, (2, 1), ())).dim == 2


def test_desk_bound(monkeypatch):
    monkeypatch.setenv("FOCKBASES_DESK_BOUND", "10")
    with pytest.raises(DeskBoundExceeded):
        specht_module(mp(C10, (2,), (1,)))


def test_relation_failure_is_reported():
    m = seminormal_module((2, 1), 0)
    broken = HeckeModule(m.dim, [m.s[0], m.s[0]], m.x, (0,))
    with pytest.raises(RelationFailure):
        broken.check()


def test_non_integer_eigenvalue():
    from sympy import QQ
    from sympy.polys.matrices import DomainMatrix

    rot = DomainMatrix([[QQ(0), QQ(-1)], [QQ(1), QQ(0)]], (2, 2), QQ)
    with pytest.raises(NonIntegerEigenvalue):
        formal_character(HeckeModule(2, [], [rot], ()))


def test_block_split_degree_one():
    blocks = block_split(C10, 1)
    assert set(blocks) == {RootElement({0: 1}), RootElement({1: 1})}
    assert all(len(v) == 1 for v in blocks.values())


@pytest.mark.parametrize("charge", [C10, Charge((2, 0)), Charge((0, 0)), Charge((1, 0), IndexSet(0))])
def test_characters_live_in_their_block(charge):
    supports = {}
    for d in (1, 2, 3):
        for alpha, ts in block_split(charge, d).items():
            for t in ts:
                s = specht_module(t)
                ch = formal_character(s)
                assert ch.dim == s.dim
                assert formal_character(specht_module(t, reverse=True)) == ch
                assert not s.center_failures()
                for tup in ch.weights:
                    assert RootElement.from_residues(tup) == alpha
                supports.setdefault(alpha, set()).update(ch.weights)
    keys = list(supports)
    for a in keys:
        for b in keys:
            if a != b:
                assert not supports[a] & supports[b]


@pytest.mark.parametrize("charge", [C10, Charge((2, 0)), Charge((0, 0)), Charge((1, 0), IndexSet(0))])
def test_consistency(charge):
    for d in (1, 2, 3):
        for alpha in block_split(charge, d):
            rep = consistency_check(charge, alpha)
            assert rep.passed, rep.witness


def test_consistency_headline_block():
    rep = consistency_check(C10, {0: 1, 1: 1})
    assert rep.passed
    dims = sorted(ch.dim for ch in rep.characters.values())
    assert dims == [1, 1, 2]
    assert rep.to_json()["passed"] is True


def test_consistency_negative_control():
    alpha = RootElement({-1: 1, 0: 1, 1: 1})
    rows, cols, d = decomposition_matrix_q1(C10, alpha)
    assert consistency_check(C10, alpha, decomposition=(rows, cols, d)).passed
    for r in range(len(rows)):
        for c in range(len(cols)):
            if rows[r] == cols[c]:
                continue
            bad = copy.deepcopy(d)
            bad[r][c] += 1
            assert not consistency_check(C10, alpha, decomposition=(rows, cols, bad)).passed


def test_formal_character_arithmetic():
    a = FormalCharacter({(0, 1): 1})
    b = FormalCharacter({(1, 0): 2})
    assert (a + b - b) == a
    assert (a + b).dim == 3
    assert a.to_json() == {"0,1": 1}
