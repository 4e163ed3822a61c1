"""Singular points of plane cubics over finite fields.

Two independent routes: an algebraic one (resultants plus root finding, works
in F_{p^k} for any k) and an exhaustive table scan for small fields.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..galoisfield import (
    ExtField,
    PositiveDimensional as InfiniteSingularLocus,
    _as_univariate,
    build_extension,
    common_zeros_affine_split,
    field_tables,
    kx_gcd,
    kx_roots,
)
from ..polyring.multipoly import MultiPoly
from .cubic import MONOMIALS, XYZ, PlaneCubic, ProjPoint


@dataclass(frozen=True)
class SingularPoint:
    point: ProjPoint
    rank: int  # rank of the tangent cone: 2 node, 1 cusp-like, 0 triple point


def _polys_over(C: PlaneCubic, K: ExtField) -> list[MultiPoly]:
    F = MultiPoly(XYZ, dict(zip(MONOMIALS, C.over(K))))
    return [F, F.diff("x"), F.diff("y"), F.diff("z")]


def _chart(polys, fixed: dict, keep: tuple[str, str]):
    out = []
    for f in polys:
        g = f.subs(fixed)
        g = g.drop_to(keep)
        out.append(MultiPoly(("x", "y"), g.terms))
    return out


def singular_points(C: PlaneCubic, search_degree: int = 1, rng: random.Random | None = None) -> list[SingularPoint]:
    """Points of P^2(F_{p^k}) where F and its three partials vanish, with tangent-cone ranks.

    For a cubic already defined over an extension field K the search field is K
    itself.  Raises InfiniteSingularLocus for non-reduced cubics.
    """
    return singular_locus(C, search_degree, rng)[0]


def singular_locus(C: PlaneCubic, search_degree: int = 1, rng: random.Random | None = None):
    """(singular points over the search field, complete) where ``complete`` certifies
    that the cubic has no further singular points over the algebraic closure."""
    rng = rng or random.Random(0)
    K = C.field if C.field is not None else build_extension(C.characteristic, search_degree)
    if C.characteristic == 0:
        raise ValueError("singular_points works over finite fields")
    polys = _polys_over(C, K)
    found: list[ProjPoint] = []
    # affine chart z = 1
    affine, complete = common_zeros_affine_split(_chart(polys, {"z": K.one}, ("x", "y")), K, rng)
    for x0, y0 in affine:
        found.append(ProjPoint((x0, y0, K.one)))
    # line at infinity: (x : 1 : 0)
    inf = [_as_univariate(f.subs({"y": K.one, "z": K.zero}).drop_to(("x",)).lift_to(("x",)), "x", K) for f in polys]
    inf = [s for s in inf if s]
    if not inf:
        raise InfiniteSingularLocus("the line z = 0 is singular")
    g = inf[0]
    for s in inf[1:]:
        g = kx_gcd(g, s)
    if len(g) > 1:
        roots = kx_roots(g, K, rng)
        complete = complete and sum(m for _, m in roots) == len(g) - 1
        for x0, _ in roots:
            found.append(ProjPoint((x0, K.one, K.zero)))
    if all(not f.evaluate({"x": K.one, "y": K.zero, "z": K.zero}) for f in polys):
        found.append(ProjPoint((K.one, K.zero, K.zero)))
    found = sorted(set(found), key=ProjPoint.sort_key)
    return [SingularPoint(P, tangent_cone_rank(C, P, K)) for P in found], complete


def quadratic_part(C: PlaneCubic, P: ProjPoint, K: ExtField):
    """Coefficients (a, b, c, linear) of the cubic recentred at P in an affine chart.

    Returns the quadratic part a U^2 + b U V + c V^2 in the local coordinates
    and the list of linear-part coefficients (zero exactly at singular points).
    """
    coords = [K(c) if isinstance(c, int) else c for c in P.coords]
    lead = next(i for i, c in enumerate(coords) if c)
    others = [i for i in range(3) if i != lead]
    F = MultiPoly(XYZ, dict(zip(MONOMIALS, C.over(K))))
    U, V = MultiPoly.gens(("u", "v"))
    sub = {}
    sub[XYZ[lead]] = MultiPoly.const(K.one, ("u", "v"))
    sub[XYZ[others[0]]] = U + coords[others[0]]
    sub[XYZ[others[1]]] = V + coords[others[1]]
    local = MultiPoly(("u", "v"), {})
    for e, c in F.terms.items():
        term = MultiPoly.const(c, ("u", "v"))
        for name, k in zip(XYZ, e):
            if k:
                term = term * sub[name] ** k
        local = local + term
    t = local.terms
    zero = K.zero
    lin = [t.get((1, 0), zero), t.get((0, 1), zero)]
    return t.get((2, 0), zero), t.get((1, 1), zero), t.get((0, 2), zero), lin


def tangent_cone_rank(C: PlaneCubic, P: ProjPoint, K: ExtField) -> int:
    a, b, c, _ = quadratic_part(C, P, K)
    if not (a or b or c):
        return 0
    return 2 if (b * b - 4 * a * c) else 1


# -- exhaustive route for small fields ---------------------------------------

@lru_cache(maxsize=None)
def _point_monomials(p: int, k: int):
    """Index arrays: canonical points, and per-point values of the cubic and quadric monomials."""
    T = field_tables(p, k)
    pts = T.points()
    mul = T.mul

    def power(col, e):
        out = np.full(len(pts), 1, dtype=np.int32)  # index of 1 is 1
        for _ in range(e):
            out = mul[out, col]
        return out

    cols = [pts[:, 0], pts[:, 1], pts[:, 2]]
    pw = {(v, e): power(cols[v], e) for v in range(3) for e in range(4)}

    def mono(exps):
        out = pw[(0, exps[0])]
        out = mul[out, pw[(1, exps[1])]]
        return mul[out, pw[(2, exps[2])]]

    cubic = np.stack([mono(m) for m in MONOMIALS])
    quad_exps = sorted({tuple(e - (1 if i == v else 0) for i, e in enumerate(m)) for m in MONOMIALS for v in range(3) if m[v]})
    quads = {e: mono(e) for e in quad_exps}
    return pts, cubic, quads


def _eval_indices(T, coeff_idx, mono_vals):
    acc = np.zeros(mono_vals[0].shape, dtype=np.int32)
    for c, m in zip(coeff_idx, mono_vals):
        if c:
            acc = T.add[acc, T.mul[c, m]]
    return acc


def _partials_int(C: PlaneCubic, p: int):
    """Integer coefficient dicts (quadric exponent -> coeff mod p) of the three partials."""
    parts = [{}, {}, {}]
    for c, m in zip(C.coeffs, MONOMIALS):
        for v in range(3):
            if m[v] and c:
                e = tuple(x - (1 if i == v else 0) for i, x in enumerate(m))
                parts[v][e] = (parts[v].get(e, 0) + c * m[v]) % p
    return parts


def singular_points_exhaustive(C: PlaneCubic, k: int = 1) -> list[ProjPoint]:
    """Singular points of a cubic over F_p found by scanning all of P^2(F_{p^k})."""
    p = C.p
    if not p:
        raise ValueError("exhaustive scan needs a cubic over a prime field")
    T = field_tables(p, k)
    pts, cubic, quads = _point_monomials(p, k)
    mask = _eval_indices(T, list(C.coeffs), list(cubic)) == 0
    for part in _partials_int(C, p):
        if not mask.any():
            break
        keys = list(part)
        vals = _eval_indices(T, [part[e] for e in keys], [quads[e] for e in keys]) if keys else np.zeros(len(pts), dtype=np.int32)
        mask &= vals == 0
    K = T.K
    return [ProjPoint([K.from_index(int(i)) for i in row]) for row in pts[mask]]


def _line_points_in(line, K: ExtField):
    """Points of the K-line a x + b y + c z = 0 (coefficients ints or K elements)."""
    a, b, c = [K(v) if isinstance(v, int) else v for v in line]
    out = []
    for P in [(K.one, s, t) for s in K.elements() for t in K.elements()] + [
        (K.zero, K.one, t) for t in K.elements()
    ] + [(K.zero, K.zero, K.one)]:
        if not (a * P[0] + b * P[1] + c * P[2]):
            out.append(P)
            if len(out) >= 5:
                break
    return out
