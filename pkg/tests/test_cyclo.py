import cmath
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tamegal.cyclo import (CycloField, CycloError, zeta, galois_apply, is_integral, is_unit,
                           fixed_subfield_check, cyclotomic_poly, totient)

CONDUCTORS = [3, 4, 5, 8, 9, 12]


def numeric(x, u=1):
    """Complex value of x under zeta_n -> exp(2 pi i u / n); an independent oracle."""
    z = cmath.exp(2j * cmath.pi * u / x.field.n)
    return sum(float(c) * z ** i for i, c in enumerate(x.coeffs))


def elems(n):
    F = CycloField(n)
    c = st.fractions(min_value=-3, max_value=3, max_denominator=3)
    return st.lists(c, min_size=F.degree, max_size=F.degree).map(F.from_coeffs)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 16])
def test_degree_is_totient(n):
    assert CycloField(n).degree == totient(n)
    assert len(cyclotomic_poly(n)) - 1 == totient(n)


def test_zeta_examples():
    F4 = CycloField(4)
    assert zeta(F4, 1).is_one()
    assert zeta(F4, 4).coeffs == (0, 1)
    F12 = CycloField(12)
    z = zeta(F12, 4)
    assert z == zeta(F12, 12) ** 3
    assert z * z + F12.one() == F12.zero()
    with pytest.raises(CycloError):
        zeta(F12, 5)


@pytest.mark.parametrize("n", [4, 8, 9, 12, 5, 15])
def test_zeta_compatibility(n):
    F = CycloField(n)
    N = F.root_order
    for d in range(1, N + 1):
        for e in range(1, N + 1):
            if N % (d * e) == 0:
                assert zeta(F, d * e) ** e == zeta(F, d)


def test_galois_examples():
    F = CycloField(4)
    z = zeta(F, 4)
    assert galois_apply(1, z) == z
    assert galois_apply(3, z) == -z


def test_integrality_examples():
    F3 = CycloField(3)
    assert is_integral(zeta(F3, 3))
    assert not is_integral(F3.from_fraction(Fraction(1, 2)))
    assert not is_integral((F3.one() + zeta(F3, 3)) * F3.from_fraction(Fraction(1, 3)))


def test_fixed_subfield_examples():
    F = CycloField(5)
    z = zeta(F, 5)
    assert fixed_subfield_check(F.from_int(7), [1, 4])
    assert fixed_subfield_check(z + z ** 4, [1, 4])
    assert not fixed_subfield_check(z, [1, 4])
    with pytest.raises(CycloError):
        fixed_subfield_check(z, [1, 2])


@pytest.mark.parametrize("n", CONDUCTORS)
@given(data=st.data())
def test_field_axioms(n, data):
    x, y, w = (data.draw(elems(n)) for _ in range(3))
    assert (x * y) * w == x * (y * w)
    assert x * (y + w) == x * y + x * w
    if not x.is_zero():
        assert x * x.inverse() == CycloField(n).one()
    assert abs(numeric(x * y) - numeric(x) * numeric(y)) < 1e-6


@pytest.mark.parametrize("n", CONDUCTORS)
@given(data=st.data())
def test_galois_is_ring_hom(n, data):
    F = CycloField(n)
    x, y = data.draw(elems(n)), data.draw(elems(n))
    u = data.draw(st.sampled_from(F.units()))
    v = data.draw(st.sampled_from(F.units()))
    assert (x + y).galois(u) == x.galois(u) + y.galois(u)
    assert (x * y).galois(u) == x.galois(u) * y.galois(u)
    assert x.galois(u).galois(v) == x.galois(u * v % n)
    assert abs(numeric(x.galois(u)) - numeric(x, u)) < 1e-6


@pytest.mark.parametrize("n", CONDUCTORS)
@given(data=st.data())
def test_integral_closed_under_products(n, data):
    F = CycloField(n)
    ints = st.lists(st.integers(-4, 4), min_size=F.degree, max_size=F.degree).map(F.from_coeffs)
    x, y = data.draw(ints), data.draw(ints)
    assert is_integral(x * y)


def test_units():
    F = CycloField(5)
    z = zeta(F, 5)
    assert is_unit(F.one() + z)
    assert not is_unit(F.one() - z)  # norm 5
    assert (F.one() - z).norm() == 5
