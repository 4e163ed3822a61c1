"""Aronhold invariants S, T of ternary cubics and the Jacobian's Weierstrass model."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from ..cubicgeom.cubic import PlaneCubic

CHECKSUMS = {
    "S": "6a30dc537f30aebf033b64eb613b30f7637070d41f2e19920881bb6706cfc810",
    "T": "e9764391a0aaa22a324f018f6e090b4f5246972642b84911fa15d2777e838278",
}

# y^2 = x^3 + C_A S x + C_B T; fixed once by matching the family's printed model
C_A = Fraction(27)
C_B = Fraction(-27, 4)


class BadCharacteristic(ValueError):
    """The invariant formulas have denominators divisible by 2 and 3."""


class SingularCubic(ValueError):
    """The cubic is singular: its Jacobian model has zero discriminant."""


class SingularCurve(ValueError):
    """4A^3 + 27B^2 = 0, so j is undefined."""


class ChecksumMismatch(RuntimeError):
    pass


@lru_cache(maxsize=None)
def load_table(name: str) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    raw = resources.files(__package__).joinpath("data").joinpath(f"aronhold_{name}.txt").read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    if digest != CHECKSUMS[name]:
        raise ChecksumMismatch(f"aronhold_{name}.txt: sha256 {digest} != {CHECKSUMS[name]}")
    terms = []
    for line in raw.decode().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        *exps, coeff = line.split()
        terms.append((tuple(int(e) for e in exps), Fraction(coeff)))
    return tuple(terms)


def _coefficients(C: PlaneCubic) -> tuple[list, object]:
    """Coefficients as values of one ring, plus a converter for rational constants."""
    if C.p:
        if C.p in (2, 3):
            raise BadCharacteristic(f"invariants need characteristic 0 or > 3, got {C.p}")
        p = C.p
        return list(C.coeffs), lambda q: q.numerator * pow(q.denominator, -1, p) % p
    if C.field is not None:
        K = C.field
        if K.p in (2, 3):
            raise BadCharacteristic(f"invariants need characteristic 0 or > 3, got {K.p}")
        return list(C.coeffs), lambda q: K(q.numerator) / K(q.denominator)
    return list(C.coeffs), lambda q: q


def _evaluate(name: str, C: PlaneCubic):
    a, conv = _coefficients(C)
    powers: dict = {}

    def pw(i, k):
        if (i, k) not in powers:
            powers[(i, k)] = a[i] ** k
        return powers[(i, k)]

    total = 0
    for exps, c in load_table(name):
        term = None
        for i, k in enumerate(exps):
            if k:
                term = pw(i, k) if term is None else term * pw(i, k)
        total = total + term * conv(c)
    if C.p:
        total %= C.p
    elif isinstance(total, Fraction) and total.denominator == 1:
        total = total.numerator
    return total


@dataclass(frozen=True)
class AronholdInvariants:
    S: object
    T: object


def aronhold_invariants(C: PlaneCubic) -> AronholdInvariants:
    """S (degree 4) and T (degree 6), normalised so that on x^3 + y^3 + z^3 + 6m xyz
    they equal m - m^4 and 1 - 20m^3 - 8m^6."""
    return AronholdInvariants(_evaluate("S", C), _evaluate("T", C))


def invariant_discriminant(C: PlaneCubic):
    """T^2 + 64 S^3: zero exactly when the cubic is singular (characteristic 0 or > 3)."""
    inv = aronhold_invariants(C)
    d = inv.T * inv.T + 64 * inv.S * inv.S * inv.S
    return d % C.p if C.p else d


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 = x^3 + A x + B."""

    A: object
    B: object

    def discriminant(self):
        return weierstrass_discriminant(self)

    def j(self):
        return j_invariant(self)

    def rescale(self, mu) -> "WeierstrassCurve":
        """The isomorphic model (A / mu^4, B / mu^6), requiring exact division."""
        return WeierstrassCurve(_exact(self.A, mu**4), _exact(self.B, mu**6))


def _exact(a, b):
    if hasattr(a, "divmod"):
        q, r = a.divmod(b if hasattr(b, "divmod") else a._lift(b))
        if r:
            raise ArithmeticError("inexact rescaling")
        return q
    q = Fraction(a) / Fraction(b)
    return q.numerator if q.denominator == 1 else q


def weierstrass_discriminant(W: WeierstrassCurve):
    return -16 * (4 * W.A**3 + 27 * W.B**2)


def j_invariant(W: WeierstrassCurve):
    """1728 * 4A^3 / (4A^3 + 27B^2), as an exact rational."""
    num = 4 * W.A**3
    den = num + 27 * W.B**2
    if not den:
        raise SingularCurve("4A^3 + 27B^2 = 0")
    if hasattr(den, "divmod"):
        return (1728 * num, den)  # rational function as (numerator, denominator)
    q = Fraction(1728) * Fraction(num) / Fraction(den)
    return q.numerator if q.denominator == 1 else q


def jacobian_weierstrass(C: PlaneCubic, check: bool = True) -> WeierstrassCurve:
    """Weierstrass model (C_A S, C_B T) of the Jacobian of a smooth cubic."""
    inv = aronhold_invariants(C)
    if C.p:
        p = C.p
        W = WeierstrassCurve(_mod(C_A, p) * inv.S % p, _mod(C_B, p) * inv.T % p)
        disc = weierstrass_discriminant(W) % p
    else:
        W = WeierstrassCurve(_scale(inv.S, C_A), _scale(inv.T, C_B))
        disc = weierstrass_discriminant(W)
    if check and not disc:
        raise SingularCubic("the cubic is singular (zero discriminant)")
    return W


def _mod(c: Fraction, p: int) -> int:
    return c.numerator * pow(c.denominator, -1, p) % p


def _scale(v, c: Fraction):
    if c.denominator == 1:
        c = c.numerator
    out = v * c
    if isinstance(out, Fraction) and out.denominator == 1:
        return out.numerator
    return out
