"""Tests for exact GF(p^r) arithmetic."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as hst

from conftest import get_field
from nearvec.errors import (
    DivisionByZeroError,
    NonPrimeError,
    ReduciblePolynomialError,
    TooLargeError,
)
from nearvec.finite_field import Field, is_prime, prime_factors


def test_make_prime_field():
    f = Field(11)
    assert f.order == 11 and f.mult_order == 10
    assert f.modulus is None


def test_make_extension_field():
    f = Field(3, 2, (1, 0, 1))  # x^2 + 1 has no root mod 3
    assert f.order == 9
    assert f.modulus == (1, 0, 1)


def test_make_rejects_composite_characteristic():
    with pytest.raises(NonPrimeError):
        Field(4)


def test_make_rejects_reducible_modulus():
    with pytest.raises(ReduciblePolynomialError) as err:
        Field(5, 2, (1, 0, 1))  # 2^2 = -1 mod 5
    assert err.value.factor is not None


def test_make_rejects_oversized_field():
    with pytest.raises(TooLargeError):
        Field(2, 21, (1, 1) + (0,) * 19 + (1,))


def test_make_requires_monic_modulus():
    with pytest.raises(ValueError):
        Field(3, 2, (1, 0, 2))
    with pytest.raises(ValueError):
        Field(3, 2, None)


def test_pow_and_inv_examples():
    f = Field(11)
    assert f.pow(2, 5) == 10
    assert f.inv(7) == 8
    assert f.add(0, 5) == 5
    assert f.pow(3, 0) == 1
    assert f.pow(0, 3) == 0
    assert f.pow(0, 0) == 1
    assert f.pow(2, -1) == f.inv(2)
    with pytest.raises(DivisionByZeroError):
        f.inv(0)
    with pytest.raises(DivisionByZeroError):
        f.pow(0, -2)


def test_elements_enumeration():
    assert list(Field(3).elements()) == [0, 1, 2]
    nine = list(get_field(3, 2).elements())
    assert len(nine) == 9 and nine[0] == 0
    assert len(list(Field(11).elements())) == 11


def test_coeffs_round_trip():
    for key in ((3, 2), (5, 2), (2, 3)):
        f = get_field(*key)
        for a in f.elements():
            assert f.element(f.coeffs(a)) == a
    with pytest.raises(ValueError):
        get_field(3, 2).element((3, 0))
    with pytest.raises(ValueError):
        get_field(3, 2).element((1,))


SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2),
                (11, 1), (13, 1), (5, 2), (7, 2), (11, 2)]


@pytest.mark.parametrize("key", SMALL_FIELDS, ids=str)
def test_field_axioms_exhaustive(key):
    # the certifying sweep for orders up to 121
    f = get_field(*key)
    add, mul = f.op_tables()
    els = range(f.order)
    for a in els:
        assert add[0][a] == a
        assert add[a][f.neg(a)] == 0
        if a:
            assert mul[a][f.inv(a)] == 1
        for b in els:
            assert add[a][b] == add[b][a]
            assert mul[a][b] == mul[b][a]
            for c in els:
                assert add[add[a][b]][c] == add[a][add[b][c]]
                assert mul[mul[a][b]][c] == mul[a][mul[b][c]]
                assert mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]]


@pytest.mark.parametrize("key", SMALL_FIELDS, ids=str)
def test_lagrange_and_frobenius(key):
    f = get_field(*key)
    add, _ = f.op_tables()
    images = [f.frobenius(a) for a in f.elements()]
    assert sorted(images) == list(f.elements())
    for a in f.elements():
        if a:
            assert f.pow(a, f.mult_order) == 1
        for b in f.elements():
            assert f.frobenius(add[a][b]) == add[images[a]][images[b]]
            assert f.frobenius(f.mul(a, b)) == f.mul(images[a], images[b])


def test_generator_is_smallest():
    assert Field(11).generator() == 2
    f9 = get_field(3, 2)
    g = f9.generator()
    seen = set()
    x = 1
    for _ in range(f9.mult_order):
        x = f9.mul(x, g)
        seen.add(x)
    assert len(seen) == f9.mult_order
    for smaller in range(2, g):
        powers = set()
        y = 1
        for _ in range(f9.mult_order):
            y = f9.mul(y, smaller)
            powers.add(y)
        assert len(powers) < f9.mult_order


def test_is_prime_and_factors():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert prime_factors(168) == [2, 3, 7]
    assert prime_factors(7) == [7]


# arithmetic beyond the dense-table regime runs through the slow path;
# sample it against the defining identities
F1024 = Field(2, 10, (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1))  # x^10 + x^3 + 1
el1024 = hst.integers(min_value=0, max_value=1023)


@settings(max_examples=200, deadline=None)
@given(el1024, el1024, el1024)
def test_large_field_sampled_laws(a, b, c):
    f = F1024
    assert f.add(a, b) == f.add(b, a)
    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == 0
    if a:
        assert f.mul(a, f.inv(a)) == 1
        assert f.pow(a, f.mult_order) == 1
