"""Point scans over P^2(F_p)."""
from __future__ import annotations

from .cubic import PlaneCubic, ProjPoint, projective_points


def _require_fp(C: PlaneCubic) -> int:
    if not C.p:
        raise ValueError("expected a cubic over a prime field")
    return C.p


def is_smooth_at(C: PlaneCubic, pt) -> bool:
    """True when pt lies on C and some partial derivative is nonzero there."""
    if C(*pt) != 0:
        return False
    return any(C.gradient(*pt))


def find_smooth_Fp_point(C: PlaneCubic, candidates=None) -> ProjPoint | None:
    """First smooth F_p-point of C in scan order, or None."""
    p = _require_fp(C)
    for pt in candidates if candidates is not None else projective_points(p):
        if is_smooth_at(C, pt):
            return ProjPoint(pt, p)
    return None


def rational_points(C: PlaneCubic) -> list[ProjPoint]:
    p = _require_fp(C)
    return [ProjPoint(pt, p) for pt in projective_points(p) if C(*pt) == 0]


def count_points(C: PlaneCubic) -> int:
    """|C(F_p)| by exhaustive scan of the p^2 + p + 1 points of P^2(F_p)."""
    p = _require_fp(C)
    return sum(1 for pt in projective_points(p) if C(*pt) == 0)


def line_points(line, p: int) -> list[tuple[int, int, int]]:
    """F_p-points of the line a x + b y + c z = 0, in scan order."""
    a, b, c = (v % p for v in line)
    return [pt for pt in projective_points(p) if (a * pt[0] + b * pt[1] + c * pt[2]) % p == 0]


def rational_lines(p: int):
    """All lines of P^2(F_p), as normalized coefficient triples, in scan order."""
    return projective_points(p)


def line_divides(C: PlaneCubic, line) -> bool:
    """Does the F_p-line divide C?  A cubic vanishing at 4 points of a line contains it."""
    p = _require_fp(C)
    pts = line_points(line, p)
    if len(pts) >= 4:
        return all(C(*pt) == 0 for pt in pts)
    from ..galoisfield import build_extension
    from .singular import _line_points_in

    K = build_extension(p, 2)
    coeffs = C.over(K)
    CK = PlaneCubic(coeffs)
    return all(CK(*pt) == 0 for pt in _line_points_in(line, K)[:4])
