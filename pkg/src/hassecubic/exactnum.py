"""Exact integers and rationals.

Rationals are ``fractions.Fraction``: canonical (lowest terms, positive
denominator) on construction, immutable, exact.  This module adds the few
things the standard library lacks: valuations, factoring over a fixed set of
primes, and parsing of ``NUM/DEN`` strings.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

BigRational = Fraction
Rational = Union[int, Fraction]

DivisionByZero = ZeroDivisionError


class NonSmoothRemainder(ValueError):
    """Raised when an integer has a prime factor outside the supplied basis."""

    def __init__(self, remainder: int):
        super().__init__(f"cofactor {remainder} is not a unit")
        self.remainder = remainder


def is_prime(n: int) -> bool:
    """Deterministic trial division; fine for the small primes used here."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"a/b"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def add(a: Rational, b: Rational) -> Fraction:
    return Fraction(a) + Fraction(b)


def mul(a: Rational, b: Rational) -> Fraction:
    return Fraction(a) * Fraction(b)


def div(a: Rational, b: Rational) -> Fraction:
    return Fraction(a) / Fraction(b)


def neg(a: Rational) -> Fraction:
    return -Fraction(a)


def cmp(a: Rational, b: Rational) -> int:
    """Three-way comparison: -1, 0 or 1."""
    a, b = Fraction(a), Fraction(b)
    return (a > b) - (a < b)


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def p_valuation(q: Rational, p: int) -> float | int:
    """v_p(q) = v_p(numerator) - v_p(denominator); ``math.inf`` for zero."""
    q = Fraction(q)
    if q == 0:
        return math.inf
    return _int_valuation(q.numerator, p) - _int_valuation(q.denominator, p)


@dataclass(frozen=True)
class FactoredInteger:
    sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        n = self.sign
        for prime, exp in self.factors:
            n *= prime**exp
        return n

    def exponent(self, prime: int) -> int:
        return dict(self.factors).get(prime, 0)

    def as_dict(self) -> dict[str, int]:
        return {str(p): e for p, e in self.factors}

    def __str__(self) -> str:
        body = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)
        body = body or "1"
        return ("-" if self.sign < 0 else "") + body


def factor_over_basis(n: int, basis: Iterable[int]) -> FactoredInteger:
    """Factor ``n`` completely over ``basis``.

    Raises NonSmoothRemainder if a cofactor other than +-1 survives.
    """
    if n == 0:
        raise ValueError("cannot factor zero")
    primes = sorted(set(basis))
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"basis element {p} is not prime")
    sign = -1 if n < 0 else 1
    n = abs(n)
    factors = []
    for p in primes:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            factors.append((p, e))
    if n != 1:
        raise NonSmoothRemainder(sign * n)
    return FactoredInteger(sign, tuple(factors))
