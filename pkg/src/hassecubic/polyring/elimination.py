"""Parameter values u at which h(x, y, u) = h_x = h_y = 0 has a solution.

Iterated resultants give a univariate polynomial in u that may carry
extraneous factors (typically from solutions escaping to infinity).  Each
rational irreducible factor is kept only if, at a root of it over a finite
field, the specialised system really has a common zero.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from ..exactnum import is_prime
from .irreducible import factor_over_Q
from .multipoly import MultiPoly, ZeroPolynomial
from .resultant import resultant
from .unipoly import UniPoly, gcd_and_squarefree_part, poly_gcd


class EliminationDegenerate(ArithmeticError):
    """Every iterated resultant vanished identically."""


def _to_univariate(R: MultiPoly, u: str) -> UniPoly:
    i = R.vars.index(u)
    cs: dict[int, object] = {}
    for e, c in R.terms.items():
        if sum(e) != e[i]:
            raise AssertionError("resultant still involves eliminated variables")
        cs[e[i]] = c
    return UniPoly([cs.get(k, 0) for k in range(max(cs, default=-1) + 1)], u)


def eliminant_candidates(h: MultiPoly, x: str = "x", y: str = "y", u: str = "u") -> list[UniPoly]:
    """Nonzero values of Res_y(Res_x(a, b), Res_x(c, d)) over pairs drawn from h, h_x, h_y."""
    hx, hy = h.diff(x), h.diff(y)
    first = {}
    for name, (a, b) in {"xy": (hx, hy), "hx": (h, hx), "hy": (h, hy)}.items():
        try:
            r = resultant(a, b, x)
        except ZeroPolynomial:
            continue
        if r:
            first[name] = r
    out = []
    for n1, n2 in (("xy", "hx"), ("xy", "hy"), ("hx", "hy")):
        if n1 in first and n2 in first:
            R = resultant(first[n1], first[n2], y)
            if R:
                out.append(_to_univariate(R, u))
    return out


def _field_value(c, K):
    c = Fraction(c)
    return K(c.numerator) / K(c.denominator)


def _has_solution_mod(h: MultiPoly, factor: UniPoly, p: int, x, y, u, rng) -> bool | None:
    """Does the system have a common zero over F_p-bar above a root of factor mod p?

    None when p is unsuitable (bad reduction of the factor or of h).
    """
    from ..galoisfield import PositiveDimensional, build_extension, common_zeros_affine, roots_in_field

    if factor.lc % p == 0 or any(Fraction(c).denominator % p == 0 for c in h.terms.values()):
        return None
    fp = factor.reduce(p)
    g, _ = gcd_and_squarefree_part(fp)
    if g.degree() > 0:
        return None
    from .unipoly import factor_mod_p

    d = min(q.degree() for q, _ in factor_mod_p(fp, p, rng))
    for m in (1, 2, 3):
        if d * m > 12:
            break
        K = build_extension(p, d * m)
        ubar = roots_in_field(fp, K, rng)[0][0]
        specialized = MultiPoly((x, y), {})
        for e, c in h.terms.items():
            ex = (e[h.vars.index(x)], e[h.vars.index(y)])
            specialized = specialized + MultiPoly((x, y), {ex: _field_value(c, K) * ubar ** e[h.vars.index(u)]})
        polys = [specialized, specialized.diff(x), specialized.diff(y)]
        polys = [MultiPoly(("x", "y"), q.terms) for q in polys]
        try:
            if common_zeros_affine(polys, K, rng):
                return True
        except PositiveDimensional:
            return True
    return False


def factor_is_genuine(h: MultiPoly, factor: UniPoly, x="x", y="y", u="u", rng=None, start: int = 7) -> bool:
    """Decide a factor at two small primes that agree (more primes are tried on disagreement)."""
    rng = rng or random.Random(0)
    votes = []
    p = start - 1
    while len(votes) < 6:
        p += 1
        if not is_prime(p):
            continue
        v = _has_solution_mod(h, factor, p, x, y, u, rng)
        if v is None:
            continue
        votes.append(v)
        if len(votes) >= 2 and votes[-1] == votes[-2]:
            return v
    raise EliminationDegenerate(f"finite-field checks disagree on {factor}")


@dataclass(frozen=True)
class EliminationResult:
    polynomial: UniPoly
    resultant_degrees: tuple[int, ...]
    kept: tuple[UniPoly, ...]
    rejected: tuple[UniPoly, ...]


def eliminate_singular_locus_detailed(h: MultiPoly, x: str = "x", y: str = "y", u: str = "u", rng=None) -> EliminationResult:
    cands = eliminant_candidates(h, x, y, u)
    if not cands:
        raise EliminationDegenerate("all iterated resultants vanish identically")
    degs = tuple(c.degree() for c in cands)
    g = reduce(poly_gcd, cands[1:], cands[0].monic())
    if g.degree() <= 0:
        return EliminationResult(UniPoly([1], u), degs, (), ())
    _, sf = gcd_and_squarefree_part(g)
    _, factors = factor_over_Q(sf.primitive(), rng)
    keep, drop = [], []
    for q, _ in factors:
        (keep if factor_is_genuine(h, q, x, y, u, rng) else drop).append(q)
    out = reduce(lambda a, b: a * b, keep, UniPoly([1], u))
    return EliminationResult(out.primitive(), degs, tuple(keep), tuple(drop))


def eliminate_singular_locus(h: MultiPoly, x: str = "x", y: str = "y", u: str = "u", rng=None) -> UniPoly:
    """Primitive squarefree polynomial in u whose roots are exactly the singular parameter values."""
    return eliminate_singular_locus_detailed(h, x, y, u, rng).polynomial
