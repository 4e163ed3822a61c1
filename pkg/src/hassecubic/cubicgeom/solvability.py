"""Local solvability of rational plane cubics over Q_p and over R."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from ..exactnum import is_prime
from ..padic import DEFAULT_PRECISION, LiftCertificate, SlopeConditionFailed, hensel_lift, vp_int
from ..polyring.unipoly import UniPoly
from .cubic import MONOMIALS, PlaneCubic, projective_points
from .points import find_smooth_Fp_point, is_smooth_at, line_divides, line_points, rational_lines
from .splitting import splits_completely

SOLVABLE = "Solvable"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SolvabilityCertificate:
    """Outcome of a local solvability search at one prime.

    ``point`` is a primitive triple of residues mod p^N on the integral model
    ``cubic``; ``free_index`` is the coordinate that was Hensel-lifted.
    """

    prime: int
    N: int
    status: str
    strategy: str
    cubic: tuple[int, ...]
    point: tuple[int, int, int] | None = None
    free_index: int | None = None
    lift: LiftCertificate | None = None
    reduction_splits: bool | None = None
    line: tuple[int, int, int] | None = None
    tried: tuple[str, ...] = field(default=())

    @property
    def solvable(self) -> bool:
        return self.status == SOLVABLE

    def replay(self) -> bool:
        """Independent recheck: the point is primitive and the cubic vanishes to order >= N."""
        if not self.solvable:
            return False
        p, N = self.prime, self.N
        if all(c % p == 0 for c in self.point):
            return False
        G = PlaneCubic(self.cubic)
        if vp_int(G(*self.point), p, N) < N:
            return False
        return self.lift is None or self.lift.replay()

    def as_dict(self) -> dict:
        return {
            "prime": self.prime,
            "precision": self.N,
            "status": self.status,
            "strategy": self.strategy,
            "point": None if self.point is None else [str(c) for c in self.point],
            "free_coordinate": None if self.free_index is None else "xyz"[self.free_index],
            "reduction_splits": self.reduction_splits,
            "line": None if self.line is None else list(self.line),
            "lift": None if self.lift is None else self.lift.as_dict(),
            "tried": list(self.tried),
        }


def _restrict(G: PlaneCubic, frozen: tuple, free: int) -> UniPoly:
    """G with two coordinates fixed to integers, as a polynomial in the third."""
    coeffs = [0, 0, 0, 0]
    for c, e in zip(G.coeffs, MONOMIALS):
        if not c:
            continue
        t = c
        for i in range(3):
            if i != free:
                t *= frozen[i] ** e[i]
        coeffs[e[free]] += t
    return UniPoly(coeffs)


def _lift_from(G: PlaneCubic, p: int, pt, N: int):
    """Hensel-lift one coordinate of an approximate zero; None if no coordinate qualifies."""
    for free in range(3):
        f = _restrict(G, tuple(pt), free)
        try:
            cert = hensel_lift(f, p, pt[free], N)
        except SlopeConditionFailed:
            continue
        out = list(pt)
        out[free] = cert.residue
        mod = p**N
        return tuple(c % mod for c in out), free, cert
    return None


def local_solvability(C: PlaneCubic, p: int, N: int = DEFAULT_PRECISION) -> SolvabilityCertificate:
    """Search for a Q_p-point on C, returning a replayable certificate or an Unknown verdict."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if N < 1:
        raise ValueError("precision must be positive")
    if C.p or C.field is not None:
        raise ValueError("local_solvability expects a cubic with rational coefficients")
    G, _ = C.integral_primitive()
    Gbar = G.reduce(p)
    tried = []

    def done(strategy, pt, splits, line=None):
        lifted = _lift_from(G, p, pt, N)
        if lifted is None:
            return None
        point, free, cert = lifted
        return SolvabilityCertificate(p, N, SOLVABLE, strategy, G.coeffs, point, free, cert, splits, line, tuple(tried))

    splits = splits_completely(Gbar)
    if not splits:
        tried.append("smooth-point")
        P = find_smooth_Fp_point(Gbar)
        if P is not None:
            res = done("smooth-point", P.coords, splits)
            if res:
                return res
    else:
        tried.append("rational-line")
        for line in rational_lines(p):
            if not line_divides(Gbar, line):
                continue
            for pt in line_points(line, p):
                if is_smooth_at(Gbar, pt):
                    res = done("rational-line", pt, splits, tuple(line))
                    if res:
                        return res
    tried.append("residue-search")
    for pt in _residue_candidates(p):
        if G(*pt) % (p * p):
            continue
        res = done("residue-search", pt, splits)
        if res:
            return res
    return SolvabilityCertificate(p, N, UNKNOWN, "exhausted", G.coeffs, reduction_splits=splits, tried=tuple(tried))


def _residue_candidates(p: int):
    """Primitive triples mod p^2: the (x : 2 : 1) chart first, then every canonical lift."""
    q = p * p
    for a in range(q):
        yield (a, 2, 1)
    for base in projective_points(p):
        free = [i for i in range(3) if i > base.index(1)]
        for shifts in product(range(p), repeat=len(free)):
            pt = list(base)
            for i, s in zip(free, shifts):
                pt[i] += p * s
            yield tuple(pt)


@dataclass(frozen=True)
class RealSolvability:
    solvable: bool
    reason: str
    bracket: tuple | None = None  # (line, lo, hi): a sign change of C along a rational line

    def __bool__(self):
        return self.solvable


def real_solvability(C: PlaneCubic) -> RealSolvability:
    """Plane curves of odd degree always have real points."""
    if C.p or C.field is not None:
        raise ValueError("real_solvability expects a cubic with rational coefficients")
    # restrict to a line t -> P + t Q on which the cubic has degree exactly 3
    for P, Q in (((0, 1, 0), (1, 0, 0)), ((0, 0, 1), (0, 1, 0)), ((1, 0, 0), (0, 0, 1)), ((0, 1, 1), (1, 0, 0)),
                 ((1, 0, 1), (0, 1, 0)), ((1, 1, 0), (0, 0, 1)), ((0, 0, 1), (1, 1, 0)), ((1, 0, 0), (0, 1, 1))):
        if C(*Q) == 0:
            continue
        bound = Fraction(1)
        while True:
            lo = C(*(a - bound * b for a, b in zip(P, Q)))
            hi = C(*(a + bound * b for a, b in zip(P, Q)))
            if lo * hi < 0:
                return RealSolvability(True, "odd degree: the restriction to a line changes sign", (P, Q, -bound, bound))
            bound *= 4
    return RealSolvability(True, "odd degree: every real plane cubic has a real point")
