import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hassecubic.family.objects import DEFAULT_CONSTANTS
from hassecubic.galoisfield import PrimeField, build_extension, prime_field, roots_in_field
from hassecubic.polyring import UniPoly

FIELDS = [(2, 1), (2, 3), (2, 4), (3, 2), (5, 2), (7, 2), (3, 3), (11, 2), (2, 8)]


def test_build_extension_examples():
    assert build_extension(2, 1).modulus == (0, 1)
    assert build_extension(2, 3).modulus == (1, 1, 0, 1)  # x^3 + x + 1
    # x^2 + 1 is the first monic quadratic with no root mod 7
    assert build_extension(7, 2).modulus == (1, 0, 1)


def test_prime_field_rejects_composites():
    with pytest.raises(ValueError):
        PrimeField(9)


@pytest.mark.parametrize("p,k", FIELDS)
def test_frobenius_fixes_exactly_prime_field(p, k):
    K = build_extension(p, k)
    rng = random.Random(p * 100 + k)
    for _ in range(30):
        a, b = K.random(rng), K.random(rng)
        assert (a * b).frobenius() == a.frobenius() * b.frobenius()
        assert (a + b).frobenius() == a.frobenius() + b.frobenius()
    if K.order <= 1024:
        fixed = [a for a in K.elements() if a.frobenius() == a]
        assert len(fixed) == p and all(a.in_prime_field() for a in fixed)


@pytest.mark.parametrize("p,k", FIELDS)
def test_multiplicative_order_divides_group_order(p, k):
    K = build_extension(p, k)
    rng = random.Random(k)
    for _ in range(20):
        a = K.random(rng)
        if a:
            assert a ** (K.order - 1) == K.one
            assert a * a.inverse() == K.one


def test_roots_examples():
    assert [(r.index(), m) for r, m in roots_in_field(UniPoly([1, 0, 1]), build_extension(2, 1))] == [(1, 2)]
    assert len(roots_in_field(UniPoly([1, 0, 1]), prime_field(3))) == 0
    roots = roots_in_field(UniPoly([1, 0, 1]), build_extension(3, 2))
    assert len(roots) == 2 and roots[0][0] != roots[1][0]


@given(st.lists(st.integers(0, 6), min_size=2, max_size=7).filter(lambda c: c[-1] % 7), st.sampled_from([1, 2]))
def test_roots_match_exhaustive_evaluation(cs, k):
    K = build_extension(7, k)
    f = UniPoly(cs).reduce(7)
    if f.degree() < 1:
        return
    got = {r for r, _ in roots_in_field(f, K)}
    expect = set()
    for a in K.elements():
        v = K.zero
        for c in reversed(f.coeffs):
            v = v * a + c
        if not v:
            expect.add(a)
    assert got == expect


def test_singular12_splits_in_degree_12_extension():
    f = DEFAULT_CONSTANTS.singular12_poly()
    K = build_extension(7, 12)
    roots = roots_in_field(f, K)
    assert len(roots) == 12 and len({r for r, _ in roots}) == 12
    for r, m in roots:
        assert m == 1
        v = K.zero
        for c in reversed(f.coeffs):
            v = v * r + c
        assert not v
