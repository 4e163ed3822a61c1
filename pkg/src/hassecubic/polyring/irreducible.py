"""Irreducibility and factorization of integer polynomials.

``is_irreducible_over_Q`` looks for a prime with irreducible reduction.  That
test is only sufficient: a polynomial can be irreducible over Q yet reducible
modulo every prime (for instance when its Galois group has no element acting
as a full cycle on the roots).  ``certify_irreducible`` covers that case with
the classical Hensel-lift-and-recombine argument, and ``factor_over_Q`` runs the
same machinery to completion.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd, isqrt

from ..exactnum import is_prime
from . import modp
from .unipoly import UniPoly, discriminant, poly_gcd


@dataclass(frozen=True)
class Witness:
    prime: int

    def __bool__(self):
        return True


@dataclass(frozen=True)
class Inconclusive:
    bound: int
    patterns: tuple = ()

    def __bool__(self):
        return False


def _int_coeffs(f: UniPoly) -> list[int]:
    cs = [int(c) for c in f.coeffs]
    if any(c != f.coeffs[i] for i, c in enumerate(cs)):
        raise ValueError("expected integer coefficients")
    return cs


def degree_pattern(f: UniPoly, p: int, rng: random.Random | None = None) -> tuple[int, ...]:
    """Sorted degrees (with multiplicity) of the irreducible factors of f mod p."""
    degs = []
    for g, e in modp.factor(list(f.reduce(p).coeffs), p, rng or random.Random(0)):
        degs += [len(g) - 1] * e
    return tuple(sorted(degs))


def is_irreducible_over_Q(f: UniPoly, prime_search_bound: int = 200, rng: random.Random | None = None):
    """Witness(p) for the first prime p <= bound, p not dividing lc(f), with f mod p irreducible."""
    cs = _int_coeffs(f)
    n = len(cs) - 1
    if n < 1:
        raise ValueError("degree must be positive")
    if n == 1:
        return Witness(next(p for p in range(2, 10**6) if is_prime(p) and cs[-1] % p))
    patterns = []
    for p in range(2, prime_search_bound + 1):
        if not is_prime(p) or cs[-1] % p == 0:
            continue
        if modp.is_irreducible(modp.trim(cs, p), p):
            return Witness(p)
        patterns.append((p, degree_pattern(f, p, rng)))
    return Inconclusive(prime_search_bound, tuple(patterns))


# -- Hensel lifting ------------------------------------------------------------

def _sym(a: list[int], m: int) -> list[int]:
    out = [((c + m // 2) % m) - m // 2 for c in a]
    while out and out[-1] == 0:
        out.pop()
    return out


def _mul_mod(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return [c % m for c in out]


def _hensel_two(f, g, h, p, a):
    """Lift f = g h mod p (g monic) to f = G H mod p^a with G monic, deg G = deg g."""
    gcd_, s, t = modp.ext_gcd(g, h, p)
    if gcd_ != [1]:
        raise ValueError("factors are not coprime mod p")
    G, H = list(g), list(h)
    m = p
    for _ in range(1, a):
        diff = [c1 - c2 for c1, c2 in _zip_long(f, _mul_mod(G, H, m * p))]
        e = modp.trim([c // m for c in diff], p)
        # solve H dG + G dH = e mod p with deg dG < deg G
        dG = modp.rem(modp.mul(t, e, p), g, p)
        dH, r = modp.divmod_(modp.sub(e, modp.mul(h, dG, p), p), g, p)
        if r:
            raise AssertionError("Hensel correction is not exact")
        G = [c % (m * p) for c in _add_scaled(G, dG, m)]
        H = [c % (m * p) for c in _add_scaled(H, dH, m)]
        m *= p
    return G, H


def _zip_long(a, b):
    n = max(len(a), len(b))
    return [((a[i] if i < len(a) else 0), (b[i] if i < len(b) else 0)) for i in range(n)]


def _add_scaled(a, b, m):
    return [x + m * y for x, y in _zip_long(a, b)]


def hensel_lift_factors(f: list[int], factors: list[list[int]], p: int, a: int) -> list[list[int]]:
    """Lift monic factors of f/lc(f) mod p to factors mod p^a (f = lc * prod, mod p^a)."""
    if len(factors) == 1:
        lc = f[-1]
        inv = pow(lc, -1, p**a)
        return [[c * inv % p**a for c in f]]
    k = len(factors) // 2
    left, right = factors[:k], factors[k:]
    g = [1]
    for q in left:
        g = modp.mul(g, q, p)
    h = modp.scale(_prod_mod(right, p), f[-1], p)
    G, H = _hensel_two([c % p**a for c in f], g, h, p, a)
    return hensel_lift_factors(G, left, p, a) + hensel_lift_factors(H, right, p, a)


def _prod_mod(polys, p):
    out = [1]
    for q in polys:
        out = modp.mul(out, q, p)
    return out


# -- recombination -------------------------------------------------------------

def _exact_int_div(f: list[int], g: list[int]):
    """f / g over Z if g divides f exactly (integer quotient), else None."""
    f = list(f)
    q = [0] * (len(f) - len(g) + 1)
    for i in range(len(f) - len(g), -1, -1):
        c, r = divmod(f[i + len(g) - 1], g[-1])
        if r:
            return None
        q[i] = c
        for j, d in enumerate(g):
            f[i + j] -= c * d
    return q if not any(f) else None


def coefficient_bound(f: list[int]) -> int:
    """Bound on |coefficients| of any factor of f times lc(f) (Mignotte)."""
    norm2 = isqrt(sum(c * c for c in f)) + 1
    return abs(f[-1]) * 2 ** (len(f) - 1) * norm2


@dataclass(frozen=True)
class IrreducibilityCertificate:
    """f mod prime has ``factors`` (lifted mod prime^exponent); no product of a proper subset divides f."""

    polynomial: tuple[int, ...]
    prime: int
    exponent: int
    bound: int
    lifted_factors: tuple[tuple[int, ...], ...]
    subsets_tested: int

    def replay(self) -> bool:
        f = list(self.polynomial)
        p, a = self.prime, self.exponent
        m = p**a
        if m <= 2 * self.bound or self.bound < coefficient_bound(f):
            return False
        # the lifted factors reproduce f modulo p^a and are irreducible mod p
        if _sym(_mul_mod([f[-1]], _prod_mod_big(self.lifted_factors, m), m), m) != _sym(f, m):
            return False
        if not all(modp.is_irreducible(modp.trim(list(g), p), p) for g in self.lifted_factors):
            return False
        found, tested = _recombine(f, [list(g) for g in self.lifted_factors], m)
        return not found and tested == self.subsets_tested

    def as_dict(self) -> dict:
        return {
            "method": "hensel-recombination",
            "prime": self.prime,
            "exponent": self.exponent,
            "factor_degrees": [len(g) - 1 for g in self.lifted_factors],
            "subsets_tested": self.subsets_tested,
        }


def _prod_mod_big(polys, m):
    out = [1]
    for q in polys:
        out = _mul_mod(out, list(q), m)
    return out


def _recombine(f, lifted, m):
    """First proper factor of f found by subset products, and the number of subsets tried."""
    r = len(lifted)
    lc = f[-1]
    tested = 0
    for size in range(1, r // 2 + 1):
        for S in combinations(range(r), size):
            tested += 1
            cand = _sym(_mul_mod([lc], _prod_mod_big([lifted[i] for i in S], m), m), m)
            g = _primitive(cand)
            if 0 < len(g) - 1 < len(f) - 1 and _exact_int_div(f, g) is not None:
                return (g, S), tested
    return None, tested


def _primitive(a):
    c = reduce(gcd, a, 0) or 1
    a = [x // c for x in a]
    if a and a[-1] < 0:
        a = [-x for x in a]
    return a


def _choose_prime(f: list[int], tries: int = 12, rng=None):
    """Among the first good primes, one giving the fewest modular factors."""
    best = None
    seen = 0
    p = 2
    while seen < tries:
        p += 1
        if not is_prime(p) or f[-1] % p == 0:
            continue
        fp = modp.trim(f, p)
        if modp.gcd(fp, modp.deriv(fp, p), p) != [1]:
            continue
        seen += 1
        facs = [g for g, _ in modp.factor(fp, p, rng or random.Random(0))]
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
    return best


def _zassenhaus(f: list[int], rng=None):
    """Irreducible factors over Z of a primitive squarefree f, plus the certificate data."""
    if len(f) <= 2:
        return [f], None
    p, facs = _choose_prime(f, rng=rng)
    B = coefficient_bound(f)
    a = 1
    while p**a <= 2 * B:
        a += 1
    m = p**a
    lifted = hensel_lift_factors(f, facs, p, a)
    out = []
    cur, remaining = list(f), list(lifted)
    tested_total = 0
    while True:
        found, tested = _recombine(cur, remaining, m)
        tested_total += tested
        if found is None:
            out.append(cur)
            break
        g, S = found
        out.append(g)
        cur = _exact_int_div(cur, g)
        remaining = [q for i, q in enumerate(remaining) if i not in S]
    cert = None
    if len(out) == 1:
        cert = IrreducibilityCertificate(tuple(f), p, a, B, tuple(tuple(g) for g in lifted), tested_total)
    return out, cert


def certify_irreducible(f: UniPoly, rng: random.Random | None = None) -> IrreducibilityCertificate | None:
    """A replayable proof that the primitive squarefree f is irreducible over Q, or None if it factors."""
    cs = _int_coeffs(f.primitive())
    if len(cs) <= 2:
        raise ValueError("degree must be at least 2")
    if discriminant(UniPoly(cs)) == 0:
        return None
    _, cert = _zassenhaus(cs, rng)
    return cert


def factor_over_Q(f: UniPoly, rng: random.Random | None = None) -> tuple[int, list[tuple[UniPoly, int]]]:
    """(content, [(primitive irreducible factor, multiplicity)]) of a nonzero polynomial over Q."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    prim = f.primitive()
    content = Fraction(f.lc) / prim.lc
    out = []
    rest = UniPoly([Fraction(c) for c in prim.coeffs], f.var)
    mult = 1
    # Yun-style: peel off the squarefree parts of successive multiplicities
    while rest.degree() > 0:
        g = poly_gcd(rest, rest.derivative())
        sf = (rest // g) if g.degree() > 0 else rest
        # factors of multiplicity exactly `mult` are those of sf not in g
        common = poly_gcd(sf, g) if g.degree() > 0 else UniPoly([1], f.var)
        exact = sf // common if common.degree() > 0 else sf
        if exact.degree() > 0:
            pieces, _ = _zassenhaus(_int_coeffs(exact.primitive()), rng)
            out += [(UniPoly(c, f.var), mult) for c in pieces]
        rest = g
        mult += 1
    out.sort(key=lambda t: (t[0].degree(), t[0].coeffs))
    return (content.numerator if content.denominator == 1 else content), out
