from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hassecubic.exactnum import (
    BigRational,
    DivisionByZero,
    NonSmoothRemainder,
    add,
    as_rational,
    cmp,
    div,
    factor_over_basis,
    is_prime,
    mul,
    neg,
    p_valuation,
)

rationals = st.fractions(max_denominator=10**6).filter(lambda q: abs(q.numerator) < 10**12)
nonzero = rationals.filter(bool)
small_primes = st.sampled_from([2, 3, 5, 7, 11, 359])


def test_factor_242325():
    f = factor_over_basis(242325, {3, 5, 359})
    assert f.sign == 1 and f.factors == ((3, 3), (5, 2), (359, 1))
    assert str(f) == "3^3 * 5^2 * 359"


def test_factor_unit_and_negative():
    assert factor_over_basis(1, {2}).factors == () and factor_over_basis(1, {2}).sign == 1
    f = factor_over_basis(-1024, {2})
    assert (f.sign, f.factors, f.value()) == (-1, ((2, 10),), -1024)


def test_factor_rejects_foreign_prime_and_bad_input():
    with pytest.raises(NonSmoothRemainder) as e:
        factor_over_basis(2 * 7, {2})
    assert e.value.remainder == 7
    with pytest.raises(ValueError):
        factor_over_basis(0, {2})
    with pytest.raises(ValueError):
        factor_over_basis(12, {4})


@given(st.lists(st.tuples(st.sampled_from([2, 3, 5, 359]), st.integers(0, 40)), max_size=6), st.sampled_from([1, -1]))
def test_factor_reconstructs(pairs, sign):
    n = sign
    for p, e in pairs:
        n *= p**e
    f = factor_over_basis(n, {2, 3, 5, 359})
    assert f.value() == n
    assert [p for p, _ in f.factors] == sorted(p for p, _ in f.factors)


def test_rational_ops():
    assert add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert Fraction(4079, 3839) - 1 == Fraction(240, 3839)
    assert cmp(Fraction(2, 4), Fraction(1, 2)) == 0
    assert cmp(1, 2) == -1 and cmp(Fraction(3), 2) == 1
    assert neg(Fraction(1, 3)) == Fraction(-1, 3)
    assert mul(Fraction(2, 3), 3) == 2
    with pytest.raises(DivisionByZero):
        div(1, 0)
    q = BigRational(6, -4)
    assert (q.numerator, q.denominator) == (-3, 2)
    assert as_rational("4079/3839") == Fraction(4079, 3839)


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    if a:
        assert mul(a, div(1, a)) == 1


def test_valuation_examples():
    assert p_valuation(Fraction(240, 3839), 5) == 1
    assert p_valuation(0, 7) == float("inf")
    assert p_valuation(Fraction(1, 9), 3) == -2


@given(nonzero, nonzero, small_primes)
def test_valuation_laws(a, b, p):
    assert p_valuation(a * b, p) == p_valuation(a, p) + p_valuation(b, p)
    assert p_valuation(a + b, p) >= min(p_valuation(a, p), p_valuation(b, p))


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(359) and not is_prime(3839)
