"""Dense univariate polynomials over F_p as lists of ints, lowest degree first.

The zero polynomial is ``[]``; every other list has a nonzero last entry.
"""
from __future__ import annotations

import random


def trim(a: list[int], p: int) -> list[int]:
    a = [c % p for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def deg(a: list[int]) -> int:
    return len(a) - 1


def add(a, b, p):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)], p)


def sub(a, b, p):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)], p)


def scale(a, c, p):
    return trim([x * c for x in a], p)


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out, p)


def divmod_(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    if len(a) <= db:
        return [], trim(a, p)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    return trim(q, p), trim(a[:db], p)


def rem(a, b, p):
    return divmod_(a, b, p)[1]


def monic(a, p):
    if not a:
        return []
    return scale(a, pow(a[-1], -1, p), p)


def gcd(a, b, p):
    a, b = trim(a, p), trim(b, p)
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def ext_gcd(a, b, p):
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = trim(a, p), trim(b, p)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], [], []
    inv = pow(r0[-1], -1, p)
    return scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)


def deriv(a, p):
    return trim([i * a[i] for i in range(1, len(a))], p)


def powmod(a, e, m, p):
    result = [1]
    base = rem(a, m, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), m, p)
        e >>= 1
        if e:
            base = rem(mul(base, base, p), m, p)
    return result


def evaluate(a, x, p):
    v = 0
    for c in reversed(a):
        v = (v * x + c) % p
    return v


def pth_root(a, p):
    return trim([a[i] for i in range(0, len(a), p)], p)


def squarefree_decomposition(f, p):
    """Monic f -> [(g_i, e_i)] with f = prod g_i^e_i and g_i squarefree, coprime."""
    f = monic(f, p)
    if len(f) <= 1:
        return []
    out = []
    fp = deriv(f, p)
    if fp:
        c = gcd(f, fp, p)
        w = divmod_(f, c, p)[0]
        i = 1
        while len(w) > 1:
            y = gcd(w, c, p)
            z = divmod_(w, y, p)[0]
            if len(z) > 1:
                out.append((z, i))
            i += 1
            w = y
            c = divmod_(c, y, p)[0]
        if len(c) > 1:
            out.extend((g, e * p) for g, e in squarefree_decomposition(pth_root(c, p), p))
    else:
        out.extend((g, e * p) for g, e in squarefree_decomposition(pth_root(f, p), p))
    return sorted(out, key=lambda t: (t[1], len(t[0]), t[0]))


def distinct_degree(f, p):
    """Squarefree monic f -> [(product of all degree-d irreducible factors, d)]."""
    out = []
    h = [0, 1]
    x = [0, 1]
    d = 0
    f = list(f)
    while 2 * (d + 1) <= len(f) - 1:
        d += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, x, p), p)
        if len(g) > 1:
            out.append((g, d))
            f = divmod_(f, g, p)[0]
            h = rem(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _random_poly(n, p, rng):
    return trim([rng.randrange(p) for _ in range(n)], p)


def equal_degree(f, d, p, rng: random.Random):
    """Split a squarefree monic f whose irreducible factors all have degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _random_poly(n, p, rng)
        if len(a) < 2:
            continue
        if p == 2:
            t = a
            acc = a
            for _ in range(d - 1):
                acc = rem(mul(acc, acc, p), f, p)
                t = add(t, acc, p)
            b = t
        else:
            b = sub(powmod(a, (p**d - 1) // 2, f, p), [1], p)
        g = gcd(f, b, p)
        if 1 < len(g) < len(f):
            return equal_degree(g, d, p, rng) + equal_degree(divmod_(f, g, p)[0], d, p, rng)


def factor(f, p, rng: random.Random | None = None):
    """Monic irreducible factors with multiplicity, sorted deterministically."""
    rng = rng or random.Random(0)
    out = []
    for g, e in squarefree_decomposition(f, p):
        for part, d in distinct_degree(g, p):
            for irr in equal_degree(part, d, p, rng):
                out.append((irr, e))
    out.sort(key=lambda t: (len(t[0]), t[0][::-1], t[1]))
    return out


def _prime_divisors(n):
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f, p) -> bool:
    """Rabin's test."""
    f = monic(trim(f, p), p)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    if powmod(x, p**n, f, p) != rem(x, f, p):
        return False
    for q in _prime_divisors(n):
        h = sub(powmod(x, p ** (n // q), f, p), x, p)
        if len(gcd(f, h, p)) > 1:
            return False
    return True
