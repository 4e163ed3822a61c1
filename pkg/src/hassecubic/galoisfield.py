"""Finite fields F_p and F_{p^k}, plus root finding in a chosen extension.

Extensions are always built directly over the prime field, with the
lexicographically first monic irreducible modulus of the requested degree, so
element encodings are reproducible run to run.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .exactnum import is_prime
from .polyring import modp
from .polyring.multipoly import MultiPoly
from .polyring.resultant import resultant
from .polyring.unipoly import UniPoly


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")


class ExtField:
    """F_{p^k} = F_p[x]/(modulus)."""

    def __init__(self, base: PrimeField, modulus: Sequence[int]):
        p = base.p
        modulus = tuple(modp.trim(list(modulus), p))
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        if not modp.is_irreducible(list(modulus), p):
            raise ValueError(f"modulus {modulus} is reducible mod {p}")
        self.base = base
        self.p = p
        self.modulus = modulus
        self.k = len(modulus) - 1
        self.order = p**self.k
        self.zero = FqElem(self, (0,) * self.k)
        self.one = self(1)
        self._inverses: dict[tuple, tuple] = {}

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    def __eq__(self, other):
        return isinstance(other, ExtField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    @property
    def degree(self) -> int:
        return self.k

    def __call__(self, value) -> "FqElem":
        if isinstance(value, FqElem):
            if value.field != self:
                raise ValueError("element belongs to another field")
            return value
        if isinstance(value, int):
            return FqElem(self, (value % self.p,) + (0,) * (self.k - 1))
        return FqElem(self, self._reduce(list(value)))

    def gen(self) -> "FqElem":
        return self([0, 1])

    def _reduce(self, cs: list[int]) -> tuple:
        p, k, m = self.p, self.k, self.modulus
        cs = [c % p for c in cs]
        for i in range(len(cs) - 1, k - 1, -1):
            c = cs[i]
            if c:
                off = i - k
                for j in range(k):
                    cs[off + j] = (cs[off + j] - c * m[j]) % p
        cs = cs[:k]
        return tuple(cs + [0] * (k - len(cs)))

    def elements(self) -> Iterator["FqElem"]:
        for digits in itertools.product(range(self.p), repeat=self.k):
            yield FqElem(self, tuple(reversed(digits)))

    def random(self, rng: random.Random) -> "FqElem":
        return FqElem(self, tuple(rng.randrange(self.p) for _ in range(self.k)))

    def from_index(self, n: int) -> "FqElem":
        cs = []
        for _ in range(self.k):
            n, r = divmod(n, self.p)
            cs.append(r)
        return FqElem(self, tuple(cs))


class FqElem:
    __slots__ = ("field", "r")

    def __init__(self, field: ExtField, r: tuple):
        self.field = field
        self.r = r

    def _other(self, o) -> tuple:
        if isinstance(o, FqElem):
            return o.r
        if isinstance(o, int):
            return (o % self.field.p,) + (0,) * (self.field.k - 1)
        return NotImplemented

    def __add__(self, o):
        b = self._other(o)
        if b is NotImplemented:
            return b
        p = self.field.p
        return FqElem(self.field, tuple((x + y) % p for x, y in zip(self.r, b)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FqElem(self.field, tuple(-x % p for x in self.r))

    def __sub__(self, o):
        b = self._other(o)
        if b is NotImplemented:
            return b
        p = self.field.p
        return FqElem(self.field, tuple((x - y) % p for x, y in zip(self.r, b)))

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, int):
            p = self.field.p
            return FqElem(self.field, tuple(x * o % p for x in self.r))
        if not isinstance(o, FqElem):
            return NotImplemented
        a, b = self.r, o.r
        k = self.field.k
        if k == 1:
            return FqElem(self.field, (a[0] * b[0] % self.field.p,))
        out = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return FqElem(self.field, self.field._reduce(out))

    __rmul__ = __mul__

    def inverse(self) -> "FqElem":
        if not any(self.r):
            raise ZeroDivisionError("inverse of zero in a finite field")
        K = self.field
        cached = K._inverses.get(self.r)
        if cached is None:
            if K.k == 1:
                cached = (pow(self.r[0], -1, K.p),)
            else:
                g, s, _ = modp.ext_gcd(modp.trim(list(self.r), K.p), list(K.modulus), K.p)
                cached = K._reduce(s)
            if len(K._inverses) < 1 << 16:
                K._inverses[self.r] = cached
        return FqElem(K, cached)

    def __truediv__(self, o):
        if isinstance(o, int):
            o = self.field(o)
        return self * o.inverse()

    def __rtruediv__(self, o):
        return self.field(o) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __bool__(self):
        return any(self.r)

    def __eq__(self, o):
        if isinstance(o, FqElem):
            return self.r == o.r and self.field == o.field
        if isinstance(o, int):
            return self.r == self._other(o)
        return NotImplemented

    def __hash__(self):
        return hash(self.r)

    def __repr__(self):
        if self.field.k == 1:
            return f"{self.r[0]}"
        terms = [f"{c}*a^{i}" if i else f"{c}" for i, c in enumerate(self.r) if c]
        return "(" + (" + ".join(terms) or "0") + ")"

    def index(self) -> int:
        n = 0
        for c in reversed(self.r):
            n = n * self.field.p + c
        return n

    def frobenius(self) -> "FqElem":
        return self ** self.field.p

    def in_prime_field(self) -> bool:
        return not any(self.r[1:])


@lru_cache(maxsize=None)
def build_extension(p: int, k: int) -> ExtField:
    """F_{p^k} with the lexicographically first monic irreducible modulus.

    Candidates x^k + c_{k-1} x^{k-1} + ... + c_0 are scanned in increasing
    order of the tuple (c_{k-1}, ..., c_0).
    """
    base = PrimeField(p)
    if k < 1:
        raise ValueError("degree must be at least 1")
    for digits in itertools.product(range(p), repeat=k):
        cand = list(reversed(digits)) + [1]
        if modp.is_irreducible(cand, p):
            return ExtField(base, cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def prime_field(p: int) -> ExtField:
    return build_extension(p, 1)


# -- dense polynomials with coefficients in an ExtField ---------------------

def _trim(a: list) -> list:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def kx_sub(a, b):
    n = max(len(a), len(b))
    zero = (a or b)[0].field.zero if (a or b) else 0
    return _trim([(a[i] if i < len(a) else zero) - (b[i] if i < len(b) else zero) for i in range(n)])


def kx_add(a, b):
    n = max(len(a), len(b))
    zero = (a or b)[0].field.zero if (a or b) else 0
    return _trim([(a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero) for i in range(n)])


def kx_mul(a, b):
    if not a or not b:
        return []
    zero = a[0].field.zero
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return _trim(out)


def kx_divmod(a, b):
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = _trim(a)
    db = len(b) - 1
    if len(a) <= db:
        return [], a
    inv = b[-1].inverse()
    zero = b[0].field.zero
    q = [zero] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = a[i - db + j] - c * b[j]
    return _trim(q), _trim(a[:db])


def kx_monic(a):
    a = _trim(a)
    if not a:
        return a
    inv = a[-1].inverse()
    return [c * inv for c in a]


def kx_gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, kx_divmod(a, b)[1]
    return kx_monic(a)


def kx_powmod(a, e, m):
    one = m[0].field.one
    result = [one]
    base = kx_divmod(a, m)[1]
    while e:
        if e & 1:
            result = kx_divmod(kx_mul(result, base), m)[1]
        e >>= 1
        if e:
            base = kx_divmod(kx_mul(base, base), m)[1]
    return result


def kx_eval(a, x):
    v = x.field.zero
    for c in reversed(a):
        v = v * x + c
    return v


def _split_roots(g, K: ExtField, rng: random.Random) -> list:
    """Roots of a monic squarefree g that splits into linear factors over K."""
    if len(g) == 1:
        return []
    if len(g) == 2:
        return [-g[0]]
    q = K.order
    x = [K.zero, K.one]
    while True:
        a = K.random(rng)
        if K.p == 2:
            t = [K.zero, a]
            acc = t
            for _ in range(K.k - 1):
                acc = kx_divmod(kx_mul(acc, acc), g)[1]
                t = kx_add(t, acc)
            b = t
        else:
            b = kx_sub(kx_powmod(kx_add(x, [a]), (q - 1) // 2, g), [K.one])
        d = kx_gcd(g, b)
        if 1 < len(d) < len(g):
            return _split_roots(d, K, rng) + _split_roots(kx_divmod(g, d)[0], K, rng)


def kx_roots(f, K: ExtField, rng: random.Random | None = None) -> list[tuple[FqElem, int]]:
    """Roots of f (coefficients in K) lying in K, with multiplicities, sorted by index."""
    rng = rng or random.Random(0)
    f = kx_monic(f)
    if not f:
        raise ValueError("zero polynomial has every element as a root")
    if len(f) == 1:
        return []
    x = [K.zero, K.one]
    xq = kx_powmod(x, K.order, f)
    g = kx_gcd(f, kx_sub(xq, x))
    roots = _split_roots(g, K, rng)
    out = []
    for r in roots:
        m, rest = 0, f
        while True:
            qt, rm = kx_divmod(rest, [-r, K.one])
            if rm:
                break
            m += 1
            rest = qt
        out.append((r, m))
    out.sort(key=lambda t: t[0].index())
    return out


def roots_in_field(f: UniPoly, K: ExtField, rng: random.Random | None = None) -> list[tuple[FqElem, int]]:
    """All roots in K of f over F_p, with multiplicity.

    f is first factored over F_p; one root of each irreducible factor whose
    degree divides [K:F_p] is found by splitting in K, the rest of its
    conjugates come from Frobenius.
    """
    from .polyring.unipoly import factor_mod_p

    p = K.p
    if f.p is None:
        f = f.reduce(p)
    elif f.p != p:
        raise ValueError("characteristic mismatch")
    if f.is_zero():
        raise ValueError("zero polynomial")
    rng = rng or random.Random(0)
    out = []
    for g, e in factor_mod_p(f, p, rng):
        d = g.degree()
        if K.k % d:
            continue
        gk = [K(c) for c in g.coeffs]
        r = _split_roots(kx_gcd(gk, kx_sub(kx_powmod([K.zero, K.one], p**d, gk), [K.zero, K.one])), K, rng)[0]
        for _ in range(d):
            out.append((r, e))
            r = r.frobenius()
    out.sort(key=lambda t: t[0].index())
    return out


class FieldTables:
    """Addition/multiplication tables of a small field, indexed by ``FqElem.index``."""

    def __init__(self, K: ExtField):
        import numpy as np

        q = K.order
        self.K = K
        self.q = q
        p, k = K.p, K.k
        elems = [K.from_index(i) for i in range(q)]
        self.elements = elems
        place = p ** np.arange(k, dtype=np.int64)
        digits = (np.arange(q, dtype=np.int64)[:, None] // place) % p  # (q, k), low digit first
        self.add = (((digits[:, None, :] + digits[None, :, :]) % p) @ place).astype(np.int32)
        # schoolbook product of digit vectors, then fold x^i (i >= k) back with the modulus
        prod = np.zeros((q, q, 2 * k - 1), dtype=np.int64)
        for i in range(k):
            prod[:, :, i:i + k] += digits[:, None, i:i + 1] * digits[None, :, :]
        prod %= p
        m = np.array(K.modulus[:k], dtype=np.int64)
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[:, :, i:i + 1]
            prod[:, :, i - k:i] = (prod[:, :, i - k:i] - c * m) % p
        self.mul = (prod[:, :, :k] @ place).astype(np.int32)
        self.neg = ((-digits % p) @ place).astype(np.int32)
        inv = np.zeros(q, dtype=np.int32)
        rows, cols = np.nonzero(self.mul == 1)
        inv[rows] = cols
        self.inv = inv
        self.sub = self.add[:, self.neg]

    def points(self):
        """Canonical points of P^2(K) as an (n, 3) index array in scan order."""
        import numpy as np

        q = self.q
        a, b = np.meshgrid(np.arange(q), np.arange(q), indexing="ij")
        first = np.stack([np.ones(q * q, dtype=np.int32), a.ravel(), b.ravel()], axis=1)
        second = np.stack([np.zeros(q, dtype=np.int32), np.ones(q, dtype=np.int32), np.arange(q)], axis=1)
        third = np.array([[0, 0, 1]], dtype=np.int32)
        return np.concatenate([first, second, third]).astype(np.int32)


@lru_cache(maxsize=None)
def field_tables(p: int, k: int) -> FieldTables:
    return FieldTables(build_extension(p, k))


# -- polynomial systems ---------------------------------------------------------

class PositiveDimensional(Exception):
    """The common zero set is not finite."""


def _as_univariate(mp: MultiPoly, var: str, K: ExtField) -> list:
    i = mp.vars.index(var)
    d = max(mp.degree(var), 0)
    out = [K.zero] * (d + 1)
    for e, c in mp.terms.items():
        out[e[i]] = K(c) if isinstance(c, int) else c
    while out and not out[-1]:
        out.pop()
    return out


def common_zeros_affine(polys: list[MultiPoly], K: ExtField, rng: random.Random | None = None):
    """Common zeros in K^2 of bivariate polynomials in (x, y) with coefficients in K.

    Raises PositiveDimensional if the common zero set over the algebraic
    closure is positive dimensional.
    """
    return common_zeros_affine_split(polys, K, rng)[0]


def _splits(f: list, roots) -> bool:
    return sum(m for _, m in roots) == len(f) - 1


def common_zeros_affine_split(polys: list[MultiPoly], K: ExtField, rng: random.Random | None = None):
    """(common zeros in K^2, flag).  The flag is True when every eliminant used
    split into linear factors over K, which proves that no common zero over
    the algebraic closure was missed."""
    rng = rng or random.Random(0)
    polys = [f for f in polys if f]
    if not polys:
        raise PositiveDimensional("all polynomials vanish")
    if any(f.is_constant() for f in polys):
        return [], True
    if len(polys) == 1:
        raise PositiveDimensional("a single curve")
    cands = []
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            f, g = polys[i], polys[j]
            if f.degree("x") <= 0 and g.degree("x") <= 0:
                r = kx_gcd(_as_univariate(f, "y", K), _as_univariate(g, "y", K))
                cands.append(r)
            else:
                cands.append(_as_univariate(resultant(f, g, "x"), "y", K))
    nonzero = [c for c in cands if c]
    if not nonzero:
        # every pair shares a factor: test two generic combinations
        for _ in range(4):
            g1 = sum((K.random(rng) * f for f in polys), MultiPoly(polys[0].vars))
            g2 = sum((K.random(rng) * f for f in polys), MultiPoly(polys[0].vars))
            if g1 and g2 and (g1.degree("x") > 0 or g2.degree("x") > 0):
                r = _as_univariate(resultant(g1, g2, "x"), "y", K)
                if r:
                    nonzero.append(r)
                    break
        else:
            raise PositiveDimensional("polynomials share a common component")
    r = nonzero[0]
    for c in nonzero[1:]:
        r = kx_gcd(r, c)
    if len(r) <= 1:
        return [], True
    out = []
    yroots = kx_roots(r, K, rng)
    complete = _splits(r, yroots)
    for y0, _ in yroots:
        specialized = [_as_univariate(f.subs({"y": y0}), "x", K) for f in polys]
        specialized = [s for s in specialized if s]
        if not specialized:
            raise PositiveDimensional("a whole line of common zeros")
        g = specialized[0]
        for s in specialized[1:]:
            g = kx_gcd(g, s)
        if len(g) > 1:
            xroots = kx_roots(g, K, rng)
            complete = complete and _splits(g, xroots)
            out.extend((x0, y0) for x0, _ in xroots)
    return out, complete
