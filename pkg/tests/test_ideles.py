import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tamegal import ideles as il
from tamegal.abelian import FinAbGroup, GroupHom, SigmaAction, elem_order
from tamegal.cohomology import RealizedTameModel
from tamegal.cyclo import CycloField, zeta
from tamegal.scenario import corpus_dir, load_scenario
from tamegal.stickelberger import CharCombo, LambdaMap, character_hom, transpose_as_reduced_resolvend
from tamegal.suites import place_system, random_fg_unit

Z2, Z3, Z4 = FinAbGroup((2,)), FinAbGroup((3,)), FinAbGroup((4,))


def corpus_system(name):
    sc = load_scenario(corpus_dir() / f"{name}.yaml")
    return sc, place_system(sc)


# ---------------------------------------------------------------------------
# local model


def test_local_tame_group_validation():
    assert il.LocalTameGroup(9).p == 3
    with pytest.raises(il.IdeleError):
        il.LocalTameGroup(6)
    with pytest.raises(il.IdeleError):
        il.LocalTameGroup(9, 2)


def test_local_values_arithmetic():
    F = CycloField(4)
    x = il.LocalMultValue(F.from_int(2) + zeta(F, 4), Fraction(1, 2))
    assert (x * x.inverse()).is_one()
    assert x ** 2 == il.LocalMultValue((F.from_int(2) + zeta(F, 4)) ** 2, 1)
    assert il.LocalMultValue.pi(F, Fraction(1, 3)) ** Fraction(3, 2) == il.LocalMultValue.pi(F, Fraction(1, 2))
    with pytest.raises(il.IdeleError):
        x ** Fraction(1, 2)
    with pytest.raises(il.IdeleError):
        il.LocalMultValue(F.zero())
    assert il.LocalMultValue(zeta(F, 4)).is_integral_unit()
    assert not il.LocalMultValue(F.from_int(2)).is_integral_unit()


def test_local_action_on_radicals():
    F = CycloField(4)
    lt = il.LocalTameGroup(5)
    r = il.LocalMultValue.pi(F, Fraction(1, 4))
    assert lt.sigma(r) == il.LocalMultValue(zeta(F, 4), Fraction(1, 4))
    assert lt.phi(r) == r
    assert lt.phi(il.LocalMultValue(zeta(F, 4))) == il.LocalMultValue(zeta(F, 4) ** 5)
    with pytest.raises(il.IdeleError):
        il.LocalTameGroup(5).sigma(il.LocalMultValue.pi(CycloField(10), Fraction(1, 5)))
    with pytest.raises(il.IdeleError):
        il.LocalTameGroup(9).sigma(il.LocalMultValue.pi(CycloField(8), Fraction(1, 3)))


@pytest.mark.parametrize("q", [3, 4, 5, 7, 9, 13])
def test_presentation_relation_on_radicals(q):
    lt = il.LocalTameGroup(q)
    F = CycloField(q - 1 if q > 2 else 1)
    for n in range(1, F.root_order + 1):
        if F.root_order % n or n % lt.p == 0:
            continue
        for a in range(n):
            for u in (F.one(), F.from_int(2) + F.zeta_power(1)):
                assert lt.relation_holds(il.LocalMultValue(u, Fraction(a, n)))


def test_local_hom_examples():
    assert len(il.local_homs(5, FinAbGroup(()))) == 1
    assert len(il.local_homs(5, Z4)) == 16
    assert len(il.local_homs(4, Z4)) == 4
    h = il.LocalTameHom(5, Z4.elem((1,)), Z4.elem((2,)))
    nr, tot = il.factorize(h)
    assert (nr.x, nr.y, tot.x, tot.y) == (Z4.elem((1,)), Z4.zero(), Z4.zero(), Z4.elem((2,)))
    assert il.total_ramification_degree(h) == 2
    assert il.is_unramified(nr) and not il.is_unramified(tot)
    with pytest.raises(il.IdeleError):
        il.LocalTameHom(4, Z4.zero(), Z4.elem((1,)))


@pytest.mark.parametrize("q", [3, 4, 5, 7, 9, 13])
@pytest.mark.parametrize("factors", [(), (2,), (4,), (2, 2), (3,), (6,), (8,), (2, 4), (2, 2, 2)])
def test_factorization_exhaustive(q, factors):
    G = FinAbGroup(factors)
    hs = il.local_homs(q, G)
    assert len(hs) == G.order() * sum(1 for s in G if (q - 1) % elem_order(s) == 0)
    for h in hs:
        nr, tot = il.factorize(h)
        assert nr * tot == h and il.is_unramified(nr) and tot.x.is_zero()


def test_prime_f_examples():
    F = CycloField(4)
    f0 = il.prime_f(Z4.zero(), 5, F)
    assert all(v.is_one() for v in f0.values)
    s = Z4.elem((1,))
    f = il.prime_f(s, 5, F)
    assert [v.exp for v in f.values] == [0, 1, 0, 0]
    assert il.prime_f_support(f) == s
    with pytest.raises(il.IdeleError):
        il.prime_f(Z3.elem((1,)), 5, CycloField(4))
    assert il.prime_f_support(LambdaMap(Z4, [il.LocalMultValue.pi(F)] + [il.LocalMultValue.one(F)] * 3)) is None


def test_local_transpose_examples():
    F = CycloField(2)
    f = il.prime_f(Z2.elem((1,)), 3, F)
    t = il.local_transpose_resolvend(f)
    assert t(CharCombo(Z2, [0, 2])) == il.LocalMultValue.pi(F)
    triv = il.local_transpose_resolvend(il.prime_f(Z2.zero(), 3, F))
    assert triv.is_identity()


@pytest.mark.parametrize("q, factors", [(5, (4,)), (13, (2, 2)), (7, (6,)), (9, (8,)), (13, (12,)), (5, (2, 4))])
def test_transpose_integral_and_sigma_shift(q, factors):
    G = FinAbGroup(factors)
    F = CycloField(q - 1)
    lt = il.LocalTameGroup(q)
    for s in lt.g_q1(G):
        f = il.prime_f(s, q, F)
        t = il.local_transpose_resolvend(f)
        assert all(v.exp.denominator == 1 and v.unit.is_one() for v in t.basis_values)
        assert il.sigma_shift_check(f, s, lt)


def test_fourier_unit_local_hom():
    F = CycloField(4)
    lt = il.LocalTameGroup(5)
    # c(chi_e) = pi^(e/4): sigma shifts by the generator
    c = il.FourierUnit(Z4, [il.LocalMultValue.pi(F, Fraction(e, 4)) for e in range(4)])
    h = c.associated_local_hom(lt)
    assert h.x.is_zero() and h.y == Z4.elem((1,))
    assert not c.is_rational(lt)
    assert il.FourierUnit.one(Z4, F).is_rational(lt)


# ---------------------------------------------------------------------------
# place systems


def test_place_system_structure():
    sc, ps = corpus_system("c2_over_c2")
    assert len(ps.base) == 3
    assert [len(ps.fiber(w)) for w in range(3)] == [2, 1, 1]
    for w in range(3):
        assert ps.places[ps.distinguished(w)].gamma == 0
    assert ps.ramified_places() == [3]
    # split fiber keeps q, singleton fiber has q^2
    assert [pl.q for pl in ps.places] == [17, 17, 9, 5]
    assert ps.roots_in_base(2)


def test_place_system_rejects_bad_data():
    rm = RealizedTameModel(8, [1, 3, 5, 7], [1, 3])
    T = rm.model.total
    with pytest.raises(il.IdeleError):
        il.PlaceSystem.from_realized(rm, [il.FiberSpec("w", 6)])
    with pytest.raises(il.IdeleError):
        il.PlaceSystem.from_realized(rm, [il.FiberSpec("w", 9, [0], e=2)])
    with pytest.raises(il.IdeleError):
        il.PlaceSystem.from_realized(rm, [il.FiberSpec("w", 16)])


def test_idele_group_laws():
    sc, ps = corpus_system("c2_over_c2")
    rng = random.Random(4)
    for _ in range(30):
        a, b, c = (il.random_lambda_idele(ps, "base", Z2, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert (a * a.inverse()).support() == []
        assert set((a * b).support()) <= set(a.support()) | set(b.support())
        assert il.idele_mul(a, il.idele_inv(a)) == il.IdeleVector.identity(ps, "LAMBDA", "base", Z2)
    x = il.random_lambda_idele(ps, "base", Z2, rng)
    y = il.nu_map(x)
    with pytest.raises(il.IdeleError):
        x * y


SYSTEMS = ["c2_over_c2", "z4_i_in_base", "kummer_z2"]


@pytest.mark.parametrize("name", SYSTEMS)
def test_diagram_identities(name):
    sc, ps = corpus_system(name)
    G = sc.G()
    rng = random.Random(name)
    roots = ps.roots_in_base(G.exponent())
    for _ in range(15):
        g1 = il.random_lambda_idele(ps, "base", G, rng)
        g2 = il.random_lambda_idele(ps, "base", G, rng)
        b = random_fg_unit(ps, G, rng)
        c = il.partial_diag(ps, "base", b)
        assert il.rag_idele(c) == il.eta_diag(ps, "base", character_hom(b.fourier(), G))
        assert il.mu_map(il.rag_idele(c)) == il.rag_idele(il.epsilon_fg(c))
        x = il.random_global_lambda(ps, G, rng)
        assert il.theta_idele(il.lambda_diag(ps, "base", x)) == \
            il.eta_diag(ps, "base", transpose_as_reduced_resolvend(x))
        if roots:
            assert il.nu_map(g1 * g2) == il.nu_map(g1) * il.nu_map(g2)
            assert il.nu_map(il.lambda_diag(ps, "base", x)) == il.lambda_diag(ps, "ext", x)
            assert il.theta_idele(il.nu_map(g1)) == il.mu_map(il.theta_idele(g1))


def test_nu_needs_roots_in_base():
    rm = RealizedTameModel(8, [1, 3, 5, 7], [1, 3])
    T = rm.model.total
    ps = il.PlaceSystem.from_realized(rm, [il.FiberSpec("w", 17)])
    assert not ps.roots_in_base(4)
    g = il.IdeleVector.identity(ps, "LAMBDA", "base", Z4)
    with pytest.raises(il.IdeleError):
        il.nu_map(g)


def test_prime_f_transport_and_descent():
    sc, ps = corpus_system("c2_over_c2")
    G = sc.G()
    assert il.nu_map(il.PrimeFElement.trivial(ps, "base", G).to_idele()).support() == []
    for wi, base in enumerate(ps.base):
        if base.ramified:
            continue
        sl = [G.zero()] * len(ps.base)
        sl[wi] = G.elem((1,))
        f = il.PrimeFElement(ps, "base", G, sl)
        nf = il.nu_map(f.to_idele())
        for v in ps.fiber(wi):
            assert nf.components[v] == il.prime_f(G.elem((1,)), ps.places[v].q, ps.field)
        assert il.f_descent(il.PrimeFElement.from_idele(nf)) == f
    bad = [G.zero()] * len(ps.places)
    bad[ps.ramified_places()[0]] = G.elem((1,))
    assert il.f_descent(il.PrimeFElement(ps, "ext", G, bad)) is None
    uneven = [G.zero()] * len(ps.places)
    uneven[ps.fiber(0)[1]] = G.elem((1,))
    assert il.f_descent(il.PrimeFElement(ps, "ext", G, uneven)) is None


def test_hv_compatibility():
    sc, ps = corpus_system("c2_over_c2")
    rm = sc.tame.build()
    act = SigmaAction.trivial(rm.model.sigma, Z2)
    assert il.check_decomposition_data(ps)
    for h in rm.model.fixed_homs(Z2, act):
        assert il.hv_compatibility_check(h, ps, act).holds
        fam = il.derived_local_family(h, ps)
        bad = list(fam)
        v = ps.fiber(0)[1]
        bad[v] = il.LocalTameHom(bad[v].q, bad[v].x + Z2.elem((1,)), bad[v].y)
        assert not il.hv_compatibility_check(h, ps, act, family=bad).holds
    triv = GroupHom(rm.model.omega_group, Z2, [Z2.zero()] * 2)
    assert il.ramified_set(il.derived_local_family(triv, ps)) == set()


# ---------------------------------------------------------------------------
# witnesses


def _kummer(name):
    sc, ps = corpus_system(name)
    F = ps.field
    ks = sc.kummer
    rads = [il.LocalMultValue(F.zeta_power(k), r) for k, r in ks.radicals]
    w = il.kummer_witness(ps, "ext", sc.G(), rads, [F.from_coeffs(b) for b in ks.betas])
    return sc, ps, w


def test_trivial_witness_verifies():
    sc, ps = corpus_system("kummer_z2")
    one_c = il.IdeleVector.identity(ps, "FG", "ext", Z2)
    b = [il.FourierUnit.one(Z2, ps.field)] * len(ps.places)
    ok, rep = il.char1_verify(one_c, b, il.IdeleVector.identity(ps, "H", "ext", Z2),
                              il.IdeleVector.identity(ps, "LAMBDA", "ext", Z2))
    assert ok and all(r.f_trivial_iff_unramified for r in rep)


@pytest.mark.parametrize("name", ["kummer_z2", "kummer_z3", "kummer_z4"])
def test_kummer_witness_and_negative_control(name):
    sc, ps, w = _kummer(name)
    ok, rep = il.char1_verify(w.c, w.b, w.u, w.f)
    assert ok
    assert all(r.f_matches_sigma and r.f_trivial_iff_unramified for r in rep)
    bad = il.perturb_unit(w, sc.kummer.perturb)
    ok2, rep2 = il.char1_verify(bad.c, bad.b, bad.u, bad.f)
    assert not ok2
    assert [r.place for r in rep2 if not r.ok()] == [ps.places[sc.kummer.perturb].name]


def test_kummer_rejects_bad_radicals():
    sc, ps = corpus_system("kummer_z2")
    F = ps.field
    rads = [il.LocalMultValue.pi(F, Fraction(1, 4))] + [il.LocalMultValue.one(F)] * 3
    with pytest.raises(il.IdeleError):
        il.kummer_witness(ps, "ext", Z2, rads, [F.one(), F.one()])
    with pytest.raises(il.IdeleError):
        il.kummer_witness(ps, "ext", Z2, rads[:2], [F.one(), F.one()])


def test_weak_multiplicativity():
    sc, ps, w = _kummer("kummer_z2")
    F = ps.field
    for rl in sc.kummer.partners:
        w2 = il.kummer_witness(ps, "ext", Z2, [il.LocalMultValue(F.zeta_power(k), r) for k, r in rl],
                               [F.one(), F.one()])
        prod, rep = il.weak_mult_witness(w, w2)
        assert il.ramified_set(prod.family) == il.ramified_set(w.family) | il.ramified_set(w2.family)
    with pytest.raises(il.IdeleError):
        il.weak_mult_witness(w, w)


def test_congruence_units():
    sc, ps = corpus_system("kummer_z2")
    F = ps.field
    one = il.IdeleVector.identity(ps, "LAMBDA", "ext", Z2)
    assert il.congruence_unit_check(one, 4)
    good = LambdaMap(Z2, [il.LocalMultValue.one(F), il.LocalMultValue(F.one() + zeta(F, 8) * 4)])
    assert il.congruence_unit_check(il.IdeleVector(ps, "LAMBDA", "ext", Z2, [good] * 4), 4)
    assert not il.congruence_unit_check(il.IdeleVector(ps, "LAMBDA", "ext", Z2, [good] * 4), 8)
    withpi = LambdaMap(Z2, [il.LocalMultValue.one(F), il.LocalMultValue.pi(F)])
    assert not il.congruence_unit_check(il.IdeleVector(ps, "LAMBDA", "ext", Z2, [withpi] * 4), 4)


def test_approx_search():
    sc, ps = corpus_system("kummer_z2")
    F = ps.field
    f = il.PrimeFElement(ps, "ext", Z2, [Z2.zero(), Z2.elem((1,)), Z2.zero(), Z2.zero()])
    res = il.approx_search(f.to_idele(), {0}, 4)
    assert res.status == "FOUND" and res.f == f and res.strengthened
    x = LambdaMap(Z2, [F.from_int(3), F.from_int(3)])
    res = il.approx_search(il.lambda_diag(ps, "ext", x), {0, 1, 2, 3}, 4, candidates=[x])
    assert res.status == "FOUND" and res.f.support() == [] and res.witness == x
    y = LambdaMap(Z2, [il.LocalMultValue.one(F), il.LocalMultValue(F.from_int(3))])
    res = il.approx_search(il.IdeleVector(ps, "LAMBDA", "ext", Z2, [y] * 4), set(), 4)
    assert res.status == "MODEL-INCOMPLETE"


def test_hs_inclusion():
    rm = RealizedTameModel(8, [1, 3, 5, 7], [1, 3])
    F = rm.galois_model.field
    act = SigmaAction.trivial(rm.model.sigma, Z2)
    z = zeta(F, 8)
    # g(1) = 2 with square root zeta_8 + zeta_8^7 in Q(zeta_8)
    root = z + z ** 7
    g = LambdaMap(Z2, [F.one(), F.from_int(2)])
    roots = LambdaMap(Z2, [F.one(), root])
    h, ok = il.hs_inclusion_check(rm, g, roots, act)
    assert ok


@settings(max_examples=100)
@given(st.integers(0, 10 ** 6))
def test_support_closure_random_pairs(seed):
    rng = random.Random(seed)
    name = rng.choice(SYSTEMS)
    sc, ps = corpus_system(name)
    G = sc.G()
    level = rng.choice(["base", "ext"])
    a = il.random_lambda_idele(ps, level, G, rng, exp_spread=rng.choice([0, 1]))
    b = il.random_lambda_idele(ps, level, G, rng, exp_spread=rng.choice([0, 1]))
    ab = a * b
    assert set(ab.support()) <= set(a.support()) | set(b.support())
    assert set(a.unit_places()) & set(b.unit_places()) <= set(ab.unit_places())
    assert (ab * b.inverse()) == a
