"""Degeneration type of a plane cubic and its Euler characteristic.

The type is read off from the singular locus over F_{p^2} and F_{p^3}: the
singular points of a reduced cubic form Galois orbits of total size at most 3,
so every one of them is defined over one of those two fields.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from ..galoisfield import build_extension
from ..polyring.multipoly import MultiPoly
from .cubic import MONOMIALS, XYZ, PlaneCubic, ProjPoint
from .points import count_points
from .singular import (
    InfiniteSingularLocus,
    quadratic_part,
    singular_points,
    singular_points_exhaustive,
    tangent_cone_rank,
)

EXHAUSTIVE_MAX_ORDER = 2197  # scan P^2(F_{p^3}) directly up to p = 13

KINDS = (
    "smooth", "nodal", "cuspidal", "conic+secant-line", "conic+tangent-line",
    "triangle", "concurrent-lines", "line+double-line", "triple-line",
)
SPLIT_KINDS = frozenset({"triangle", "concurrent-lines", "line+double-line", "triple-line"})

# (degree, geometric genus, preimages of singular points) per component, and #C_sing
_COMPONENTS = {
    "smooth": ([(3, 1, 0)], 0),
    "nodal": ([(3, 0, 2)], 1),
    "cuspidal": ([(3, 0, 1)], 1),
    "conic+secant-line": ([(2, 0, 2), (1, 0, 2)], 2),
    "conic+tangent-line": ([(2, 0, 1), (1, 0, 1)], 1),
    "triangle": ([(1, 0, 2)] * 3, 3),
    "concurrent-lines": ([(1, 0, 1)] * 3, 1),
    "line+double-line": ([(1, 0, 1), (1, 0, 1)], 1),
    "triple-line": ([(1, 0, 0)], 0),
}


class UnsupportedField(ValueError):
    """Classification is only implemented over prime fields F_p."""


def euler_char_from_normalization(components, s: int, m: int | None = None) -> int:
    """sum(2 - 2 g_i) + s - m for the normalization of the reduced curve.

    ``components`` holds (genus, ...) or (degree, genus, preimages) tuples;
    when m is omitted it is the sum of the preimage counts.
    """
    genera = [c[1] if len(c) >= 3 else c[0] for c in components]
    if m is None:
        m = sum(c[2] for c in components)
    if m < s:
        raise ValueError("each singular point has at least one preimage")
    return sum(2 - 2 * g for g in genera) + s - m


@dataclass(frozen=True)
class DegenerationType:
    kind: str
    euler_characteristic: int
    components: tuple
    singular_count: int

    @classmethod
    def of(cls, kind: str) -> "DegenerationType":
        comps, s = _COMPONENTS[kind]
        return cls(kind, euler_char_from_normalization(comps, s), tuple(comps), s)

    @property
    def splits(self) -> bool:
        return self.kind in SPLIT_KINDS


def _tangent_direction(C: PlaneCubic, P: ProjPoint, K):
    """Point at infinity (in the local chart) of the unique tangent line at a rank-1 point."""
    a, b, c, _ = quadratic_part(C, P, K)
    lead = next(i for i, v in enumerate(P.coords) if v)
    others = [i for i in range(3) if i != lead]
    if a:
        if K.p == 2:
            r = c / a
            s = r ** (K.order // 2)  # square root via inverse Frobenius
        else:
            s = -b / (2 * a)
        uv = (s, K.one)
    else:
        uv = (K.one, K.zero)
    D = [K.zero] * 3
    D[others[0]], D[others[1]] = uv
    return D


def _line_in_curve(C: PlaneCubic, P: ProjPoint, D, K) -> bool:
    s = MultiPoly.gen("s", ("s",))
    P = [K(v) if isinstance(v, int) else v for v in P.coords]
    param = [s * d + p for p, d in zip(P, D)]
    total = MultiPoly(("s",))
    for c, (i, j, k) in zip(C.over(K), MONOMIALS):
        if c:
            total = total + param[0] ** i * param[1] ** j * param[2] ** k * c
    return not total


def _singular_census(C: PlaneCubic, rng):
    """(number of singular points over the closure, the F_p-rational ones)."""
    p = C.p
    if p**3 <= EXHAUSTIVE_MAX_ORDER:
        two = singular_points_exhaustive(C, 2)
        if len(two) > 3:
            raise InfiniteSingularLocus("more than three singular points")
        three = singular_points_exhaustive(C, 3)
    else:
        two = [sp.point for sp in singular_points(C, 2, rng)]
        three = [sp.point for sp in singular_points(C, 3, rng)]
    rational = [P for P in two if P.in_prime_field()]
    return len(two) + len(three) - len(rational), rational


def classify_degeneration(C: PlaneCubic, rng: random.Random | None = None) -> DegenerationType:
    p = C.p
    if not p:
        raise UnsupportedField("classification needs a cubic over a prime field F_p")
    rng = rng or random.Random(0)
    try:
        s, rational = _singular_census(C, rng)
    except InfiniteSingularLocus:
        # non-reduced: L^2 M with L, M rational, or L^3
        n = count_points(C)
        return DegenerationType.of("triple-line" if n == p + 1 else "line+double-line")
    if s == 0:
        return DegenerationType.of("smooth")
    if s == 2:
        return DegenerationType.of("conic+secant-line")
    if s == 3:
        return DegenerationType.of("triangle")
    if s != 1:
        raise AssertionError(f"a reduced cubic has at most 3 singular points, found {s}")
    P = rational[0]
    K = build_extension(p, 2)
    rank = tangent_cone_rank(C, P, K)
    if rank == 2:
        return DegenerationType.of("nodal")
    if rank == 0:
        return DegenerationType.of("concurrent-lines")
    D = _tangent_direction(C, P, K)
    if _line_in_curve(C, P, D, K):
        return DegenerationType.of("conic+tangent-line")
    return DegenerationType.of("cuspidal")


def splits_by_singular_structure(C: PlaneCubic) -> bool:
    """Complete splitting read off from the degeneration type (valid in every characteristic)."""
    return classify_degeneration(C).splits
