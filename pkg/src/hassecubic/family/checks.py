"""Finite checks on the base change u(t) and local points on individual fibers."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..cubicgeom.solvability import SolvabilityCertificate, local_solvability
from ..exactnum import p_valuation
from ..padic import vp_int
from .objects import INFINITY, build_fiber, second_chart, second_chart_to_fiber, t_denominator, u_of_t

RESIDUE_PRIMES = (2, 3, 5)
INTEGRAL_PRIME = 359


def _val(v) -> str:
    return "oo" if v == math.inf else str(v)


@dataclass(frozen=True)
class ResidueReport:
    t: object
    u: object
    ok: bool
    breakdown: tuple[tuple[int, str, str, bool], ...]  # (p, quantity, valuation, ok)

    def as_dict(self) -> dict:
        return {
            "t": str(self.t),
            "u": str(self.u),
            "ok": self.ok,
            "primes": [{"p": p, "quantity": q, "valuation": v, "ok": ok} for p, q, v, ok in self.breakdown],
        }


def verify_residue_conditions(t) -> ResidueReport:
    """v_p(u(t) - 1) >= 1 for p = 2, 3, 5 and v_359(u(t)) >= 0."""
    u = u_of_t(t)
    rows = []
    if u is INFINITY:
        return ResidueReport(t, u, False, ((0, "u", "-oo", False),))
    for p in RESIDUE_PRIMES:
        v = p_valuation(u - 1, p)
        rows.append((p, "u-1", _val(v), v >= 1))
    v = p_valuation(u, INTEGRAL_PRIME)
    rows.append((INTEGRAL_PRIME, "u", _val(v), v >= 0))
    return ResidueReport(t, u, all(r[3] for r in rows), tuple(rows))


@dataclass(frozen=True)
class StructuralReport:
    fourth_powers: dict  # p -> sorted images of t^4 on P^1(F_p)
    v_map_values: dict  # v in {0, 1, oo} -> u
    denominator_roots_mod_359: tuple[int, ...]
    u_at_infinity: str
    ok: bool

    def as_dict(self) -> dict:
        return {
            "t4_images": {str(p): v for p, v in self.fourth_powers.items()},
            "u_on_0_1_oo": {k: str(v) for k, v in self.v_map_values.items()},
            "denominator_roots_mod_359": list(self.denominator_roots_mod_359),
            "u_at_t_infinity": self.u_at_infinity,
            "ok": self.ok,
        }


def verify_structural_u_map() -> StructuralReport:
    """Exhaustive residue checks behind the choice of u(t)."""
    fourth = {}
    ok = True
    for p in RESIDUE_PRIMES:
        images = sorted({str(pow(t, 4, p)) for t in range(p)} | {"oo"})
        fourth[p] = images
        ok &= set(images) <= {"0", "1", "oo"}
    vals = {}
    for v in (0, 1, INFINITY):
        if v is INFINITY:
            u = Fraction(1)  # ratio of leading coefficients of v^3 - v - 1 and v^3 - v^2 - 1
        else:
            u = Fraction(v**3 - v - 1, v**3 - v**2 - 1)
        vals[str(v)] = u
        ok &= u == 1
    den = t_denominator()
    roots = tuple(t for t in range(INTEGRAL_PRIME) if den(t) % INTEGRAL_PRIME == 0)
    ok &= not roots
    u_inf = u_of_t(INFINITY)
    ok &= u_inf is not INFINITY
    return StructuralReport(fourth, vals, roots, str(u_inf), ok)


@dataclass(frozen=True)
class FiberPoint:
    """A Q_p-point of W_u: either found directly or through the pencil's second chart."""

    u: Fraction
    prime: int
    chart: str
    certificate: SolvabilityCertificate
    point_on_fiber: tuple | None

    @property
    def solvable(self) -> bool:
        return self.certificate.solvable

    def replay(self) -> bool:
        if not self.certificate.replay():
            return False
        if self.chart == "second":
            # W_u(x, y, r w - x - y) = G(x, y, w) identically since u r = 1; recheck on exact values
            r = 1 / self.u
            x, y, w = self.certificate.point
            lhs = build_fiber(self.u)(*second_chart_to_fiber((x, y, w), r))
            rhs = second_chart(r)(x, y, w)
            if lhs != rhs:
                return False
            return vp_int(Fraction(rhs).numerator, self.prime) - vp_int(Fraction(rhs).denominator, self.prime) >= self.certificate.N
        return True

    def as_dict(self) -> dict:
        d = self.certificate.as_dict()
        d["chart"] = self.chart
        d["u"] = str(self.u)
        if self.point_on_fiber is not None:
            d["point_on_fiber"] = [str(c) for c in self.point_on_fiber]
        return d


def fiber_local_point(u, p: int, N: int) -> FiberPoint:
    """Local point on W_u at p; when v_p(u) < 0 the chart w = (x+y+z)/r, r = 1/u, is used."""
    u = Fraction(u)
    if u != 0 and p_valuation(u, p) < 0:
        r = 1 / u
        cert = local_solvability(second_chart(r), p, N)
        pt = second_chart_to_fiber(cert.point, r, p**N) if cert.solvable else None
        return FiberPoint(u, p, "second", cert, pt)
    cert = local_solvability(build_fiber(u), p, N)
    return FiberPoint(u, p, "first", cert, cert.point)
