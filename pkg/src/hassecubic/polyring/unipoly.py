"""Dense univariate polynomials over Z, Q or F_p."""
from __future__ import annotations

import random
from fractions import Fraction
from functools import reduce
from math import gcd as igcd
from typing import Iterable, Sequence

from . import modp
from .multipoly import MultiPoly
from .resultant import bareiss_det, sylvester_matrix


class DegreeTooSmall(ValueError):
    pass


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class UniPoly:
    """Coefficients lowest degree first; ``p`` set means coefficients live in F_p."""

    __slots__ = ("coeffs", "var", "p")

    def __init__(self, coeffs: Iterable, var: str = "x", p: int | None = None):
        cs = [c % p for c in coeffs] if p else [_norm(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var
        self.p = p

    @classmethod
    def from_multipoly(cls, mp: MultiPoly, var: str, p: int | None = None) -> "UniPoly":
        i = mp.vars.index(var)
        d = max(mp.degree(var), 0)
        cs = [0] * (d + 1)
        for e, c in mp.terms.items():
            if sum(e) != e[i]:
                raise ValueError(f"polynomial is not univariate in {var}")
            cs[e[i]] = c
        return cls(cs, var, p)

    def to_multipoly(self, variables: Sequence[str] | None = None) -> MultiPoly:
        variables = tuple(variables or (self.var,))
        i = variables.index(self.var)
        terms = {}
        for k, c in enumerate(self.coeffs):
            e = [0] * len(variables)
            e[i] = k
            terms[tuple(e)] = c
        return MultiPoly(variables, terms)

    # -- basics -------------------------------------------------------
    def _new(self, coeffs):
        return UniPoly(coeffs, self.var, self.p)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs and self.p == other.p
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.p))

    def __repr__(self):
        dom = f" mod {self.p}" if self.p else ""
        if not self.coeffs:
            return f"UniPoly(0{dom})"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c:
                parts.append(f"{c}*{self.var}^{k}" if k else f"{c}")
        return "UniPoly(" + " + ".join(parts) + dom + ")"

    def __call__(self, x):
        v = 0
        for c in reversed(self.coeffs):
            v = v * x + c
        return v % self.p if self.p and isinstance(v, int) else v

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return self._new([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return self._new([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return self._new([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return reduce(lambda a, b: a * b, [self] * n, self._new([1]))

    def _lift(self, other):
        if isinstance(other, UniPoly):
            return other
        return self._new([other])

    def derivative(self) -> "UniPoly":
        return self._new([k * c for k, c in enumerate(self.coeffs)][1:])

    def _inv(self, c):
        return pow(c, -1, self.p) if self.p else Fraction(1) / c

    def divmod(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.p:
            q, r = modp.divmod_(list(self.coeffs), list(other.coeffs), self.p)
            return self._new(q), self._new(r)
        a = [Fraction(c) for c in self.coeffs]
        db = other.degree()
        inv = self._inv(other.lc)
        if len(a) <= db:
            return self._new([]), self._new(a)
        q = [Fraction(0)] * (len(a) - db)
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i] * inv
            q[i - db] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    a[i - db + j] -= c * b
        return self._new(q), self._new(a[:db])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        inv = self._inv(self.lc)
        return self._new([c * inv for c in self.coeffs])

    def reduce(self, p: int) -> "UniPoly":
        """Reduce integer (or p-integral rational) coefficients mod p."""
        out = []
        for c in self.coeffs:
            c = Fraction(c)
            out.append(c.numerator * pow(c.denominator, -1, p))
        return UniPoly(out, self.var, p)

    def lift(self) -> "UniPoly":
        return UniPoly(self.coeffs, self.var, None)

    def content(self) -> int:
        return reduce(igcd, (int(c) for c in self.coeffs), 0)

    def primitive(self) -> "UniPoly":
        """Primitive integer polynomial with positive leading coefficient."""
        if not self.coeffs:
            return self
        den = reduce(lambda a, b: a * b // igcd(a, b), (Fraction(c).denominator for c in self.coeffs), 1)
        ints = [int(Fraction(c) * den) for c in self.coeffs]
        g = reduce(igcd, ints, 0)
        ints = [c // g for c in ints]
        if ints[-1] < 0:
            ints = [-c for c in ints]
        return UniPoly(ints, self.var, None)

    def compose_power(self, k: int) -> "UniPoly":
        """f(x^k)."""
        out = [0] * (k * self.degree() + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return self._new(out)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over Q or F_p (zero if both are zero)."""
    if a.p != b.p:
        raise ValueError("domain mismatch")
    while b:
        a, b = b, a % b
    return a.monic()


def resultant(f: UniPoly, g: UniPoly):
    if f.is_zero() or g.is_zero():
        return 0
    if f.degree() == 0:
        return f.lc ** g.degree()
    if g.degree() == 0:
        return g.lc ** f.degree()
    if f.p:
        rows = sylvester_matrix(f.coeffs[::-1], g.coeffs[::-1])
        return _det_mod_p(rows, f.p)
    rows = sylvester_matrix(f.coeffs[::-1], g.coeffs[::-1])
    return bareiss_det(rows)


def _det_mod_p(rows, p):
    m = [[c % p for c in r] for r in rows]
    n = len(m)
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det = det * m[k][k] % p
        inv = pow(m[k][k], -1, p)
        for i in range(k + 1, n):
            f = m[i][k] * inv % p
            if f:
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[k])]
    return det % p


def discriminant(f: UniPoly):
    """(-1)^(d(d-1)/2) Res(f, f') / lc(f)."""
    d = f.degree()
    if d < 2:
        raise DegreeTooSmall(f"discriminant needs degree >= 2, got {d}")
    r = resultant(f, f.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    if f.p:
        return sign * r * pow(f.lc, -1, f.p) % f.p
    q = Fraction(sign * r) / f.lc
    return q.numerator if q.denominator == 1 else q


def gcd_and_squarefree_part(f: UniPoly) -> tuple[UniPoly, UniPoly]:
    """(gcd(f, f'), product of the distinct irreducible factors), both monic."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    g = poly_gcd(f, f.derivative())
    if f.p:
        parts = modp.squarefree_decomposition(list(f.coeffs), f.p)
        sf = [1]
        for h, _ in parts:
            sf = modp.mul(sf, h, f.p)
        return g, UniPoly(sf, f.var, f.p)
    return g, (f // g).monic()


def factor_mod_p(f: UniPoly, p: int | None = None, rng: random.Random | None = None):
    """[(monic irreducible factor, multiplicity)] of f over F_p.

    The leading coefficient times the product of the factors reconstructs f.
    """
    p = p or f.p
    if f.p is None:
        f = f.reduce(p)
    if f.is_zero():
        raise ValueError("zero polynomial")
    return [(UniPoly(g, f.var, p), e) for g, e in modp.factor(list(f.coeffs), p, rng)]
