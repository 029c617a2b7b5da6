import random
from math import gcd
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tamegal.abelian import FinAbGroup, Character
from tamegal.cyclo import CycloField, zeta
from tamegal.ideles import LocalMultValue
from tamegal.resolvend import GaloisModel
from tamegal.stickelberger import (CharCombo, StickelbergerError, pairing, pairing_table, theta,
                                   theta_exponents, agh_basis, integrality_criterion,
                                   equivariance_check, LambdaMap, lambda_equivariant, transpose,
                                   transpose_as_reduced_resolvend, character_hom, lift_to_resolvend)

GROUPS = [(), (2,), (3,), (4,), (2, 2), (6,), (2, 4), (3, 3), (8,), (2, 2, 2)]


def chi(G, *c):
    return Character(G, tuple(c))


def test_pairing_examples():
    Z2, Z4 = FinAbGroup((2,)), FinAbGroup((4,))
    assert pairing(chi(Z2, 1), Z2.elem((1,))) == Fraction(1, 2)
    assert pairing(chi(Z4, 1), Z4.elem((1,))) == Fraction(1, 4)
    assert pairing(chi(Z4, 1), Z4.elem((2,))) == Fraction(1, 2)
    assert pairing(chi(Z4, 0), Z4.elem((3,))) == 0
    with pytest.raises(StickelbergerError):
        pairing(chi(Z2, 1), Z4.elem((1,)))


def test_theta_examples():
    Z2 = FinAbGroup((2,))
    s = Z2.elem((1,))
    t = theta(CharCombo.of(Z2, {chi(Z2, 1): 1}))
    assert t.coefficient(s) == Fraction(1, 2) and not t.is_integral()
    t2 = theta(CharCombo.of(Z2, {chi(Z2, 1): 2}))
    assert t2.coefficient(s) == 1 and t2.coefficient(Z2.zero()) == 0
    assert theta_exponents(CharCombo.of(Z2, {chi(Z2, 1): 2})) == [0, 1]
    with pytest.raises(StickelbergerError):
        theta_exponents(CharCombo.of(Z2, {chi(Z2, 1): 1}))


def test_basis_index_examples():
    assert agh_basis(FinAbGroup((2,))).index() == 2
    assert agh_basis(FinAbGroup((2, 2))).index() == 4


@pytest.mark.parametrize("factors", GROUPS)
def test_basis_index_is_group_order(factors):
    G = FinAbGroup(factors)
    L = agh_basis(G)
    assert L.rank() == G.order()
    assert L.index() == G.order()
    for psi in L.elements():
        assert psi.det().is_trivial()
        assert theta(psi).is_integral()


@pytest.mark.parametrize("factors", GROUPS)
def test_pairing_table_is_additive_in_chi(factors):
    G = FinAbGroup(factors)
    P = pairing_table(G)
    dual = G.dual()
    for a in dual:
        for b in dual:
            ab = G.index((a * b).as_elem())
            for j in range(G.order()):
                d = P[G.index(a.as_elem())][j] + P[G.index(b.as_elem())][j] - P[ab][j]
                assert d.denominator == 1 and d in (0, 1)


def _random_combo(G, rng, lo=-3, hi=3):
    return CharCombo(G, [rng.randint(lo, hi) for _ in range(G.order())])


@given(st.sampled_from(GROUPS), st.integers(0, 10 ** 6))
def test_integrality_matches_det_kernel(factors, seed):
    G = FinAbGroup(factors)
    psi = _random_combo(G, random.Random(seed))
    integral, in_lattice = integrality_criterion(psi)
    det_trivial = psi.det().is_trivial()
    assert integral == in_lattice == det_trivial


@given(st.sampled_from(GROUPS), st.integers(0, 10 ** 6))
def test_equivariance_under_units(factors, seed):
    G = FinAbGroup(factors)
    rng = random.Random(seed)
    psi = _random_combo(G, rng)
    m = max(G.exponent(), 1)
    units = [u for u in range(1, m + 1) if m == 1 or gcd(u, m) == 1]
    assert equivariance_check(psi, rng.choice(units))


def test_equivariance_example_and_errors():
    Z4 = FinAbGroup((4,))
    assert equivariance_check(CharCombo.of(Z4, {chi(Z4, 1): 1}), 3)
    with pytest.raises(StickelbergerError):
        equivariance_check(CharCombo.of(Z4, {chi(Z4, 1): 1}), 2)
    with pytest.raises(StickelbergerError):
        CharCombo.of(Z4, {chi(Z4, 1): Fraction(1, 2)}).det()


def test_transpose_of_uniformizer_example():
    Z2 = FinAbGroup((2,))
    F = CycloField(2)
    f = LambdaMap(Z2, [LocalMultValue.one(F), LocalMultValue.pi(F)])
    psi = CharCombo.of(Z2, {chi(Z2, 1): 2})
    assert transpose(f, psi) == LocalMultValue.pi(F)
    with pytest.raises(StickelbergerError):
        transpose(f, CharCombo.of(Z2, {chi(Z2, 1): 1}))


def test_transpose_is_multiplicative_in_f_and_psi():
    G = FinAbGroup((4,))
    F = CycloField(4)
    rng = random.Random(3)
    L = agh_basis(G)
    for _ in range(10):
        f = LambdaMap(G, [F.one() + zeta(F, 4) ** rng.randint(0, 3) * rng.randint(1, 3) for _ in G])
        g = LambdaMap(G, [F.from_int(rng.randint(1, 4)) for _ in G])
        a, b = L.element(rng.randrange(4)), L.element(rng.randrange(4))
        assert transpose(f * g, a) == transpose(f, a) * transpose(g, a)
        assert transpose(f, a + b) == transpose(f, a) * transpose(f, b)
        hom = transpose_as_reduced_resolvend(f)
        assert hom(a + b) == transpose(f, a + b)


def test_equivariant_map_and_transpose():
    G = FinAbGroup((4,))
    gm = GaloisModel(4)
    F = gm.field
    z = zeta(F, 4)
    f = LambdaMap(G, [z ** s.coords[0] for s in G])
    assert lambda_equivariant(f, gm)
    transpose_as_reduced_resolvend(f, gm)
    bad = LambdaMap(G, [F.one(), z, F.one(), F.one()])
    assert not lambda_equivariant(bad, gm)
    with pytest.raises(StickelbergerError):
        transpose_as_reduced_resolvend(bad, gm)


def test_lift_restricts_to_transpose():
    G = FinAbGroup((2, 2))
    gm = GaloisModel(8)
    F = gm.field
    rng = random.Random(0)
    roots = LambdaMap(G, [F.one() + zeta(F, 8) ** rng.randint(0, 7) for _ in G])
    f = LambdaMap(G, [r ** 2 for r in roots.values])
    beta = lift_to_resolvend(f, roots, gm)
    assert character_hom(beta.fourier(), G) == transpose_as_reduced_resolvend(f)
    with pytest.raises(StickelbergerError):
        lift_to_resolvend(f, f, gm)
