"""Does a cubic over F_p factor into three lines over the algebraic closure?

For p >= 5 the test compares the Hessian with the cubic: a product of three
lines is exactly a cubic whose Hessian is a (possibly zero) multiple of itself.
In characteristic 2 every Hessian vanishes, and so does H/2 for the Fermat
cubic, so there the answer is read off from the singular locus instead.
Characteristic 3 is excluded because the Hessian test gives wrong answers
there (for instance on xy^2 + xyz + xz^2 + 2y^3 + 2z^3); it goes through the
oracle.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..galoisfield import field_tables, prime_field
from ..polyring.multipoly import MultiPoly
from .cubic import MONOMIALS, XYZ, PlaneCubic
from .singular import _point_monomials

ORACLE_MAX_P = 7


class CharacteristicThree(ValueError):
    """The Hessian test is invalid in characteristic 3."""


class SearchSpaceTooLarge(ValueError):
    """Exhaustive search over F_{p^3} would be too expensive."""


@lru_cache(maxsize=None)
def half_hessian_forms():
    """For each cubic monomial, the H/2 coefficient as a list of (int, exponent-in-a) pairs."""
    names = tuple(f"a{i}" for i in range(10)) + XYZ
    a = MultiPoly.gens(names)[:10]
    x, y, z = MultiPoly.gens(names)[10:]
    F = MultiPoly(names, {})
    for ai, (i, j, k) in zip(a, MONOMIALS):
        F = F + ai * x**i * y**j * z**k
    d = [F.diff(v) for v in XYZ]
    m = [[d[i].diff(v) for v in XYZ] for i in range(3)]
    H = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    forms = {mono: [] for mono in MONOMIALS}
    for e, c in H.terms.items():
        assert c % 2 == 0
        forms[e[10:]].append((c // 2, e[:10]))
    return tuple(tuple(forms[mono]) for mono in MONOMIALS)


def half_hessian(C: PlaneCubic) -> PlaneCubic | None:
    """H/2 of the cubic reduced mod p, or None when it vanishes identically."""
    p = _require_prime(C)
    out = []
    for form in half_hessian_forms():
        s = 0
        for c, e in form:
            t = c
            for ai, k in zip(C.coeffs, e):
                if k:
                    t = t * ai**k
            s += t
        out.append(s % p)
    return PlaneCubic(out, p) if any(out) else None


def _require_prime(C: PlaneCubic) -> int:
    if not C.p:
        raise ValueError("expected a cubic over a prime field F_p")
    return C.p


def _proportional(u, v, p) -> bool:
    """Is u = lambda * v mod p for some lambda (possibly 0)?"""
    i = next(i for i, c in enumerate(v) if c % p)
    lam = u[i] * pow(v[i], -1, p) % p
    return all((ui - lam * vi) % p == 0 for ui, vi in zip(u, v))


def splits_into_lines(C: PlaneCubic) -> bool:
    """True iff C is a product of three linear forms over the algebraic closure of F_p."""
    p = _require_prime(C)
    if p == 3:
        raise CharacteristicThree("route characteristic 3 through splits_into_lines_oracle")
    if p == 2:
        from .classify import splits_by_singular_structure

        return splits_by_singular_structure(C)
    H = half_hessian(C)
    if H is None:
        return True
    return _proportional(H.coeffs, C.coeffs, p)


def splits_into_lines_batch(coeffs: np.ndarray, p: int) -> np.ndarray:
    """Vectorised splits_into_lines for an (n, 10) array of coefficients mod p."""
    if p in (2, 3):
        raise CharacteristicThree("the batch Hessian test needs p >= 5")
    A = np.asarray(coeffs, dtype=np.int64) % p
    pw = [[np.ones(len(A), dtype=np.int64)] for _ in range(10)]
    for i in range(10):
        for _ in range(3):
            pw[i].append(pw[i][-1] * A[:, i] % p)
    H = np.zeros_like(A)
    for j, form in enumerate(half_hessian_forms()):
        acc = np.zeros(len(A), dtype=np.int64)
        for c, e in form:
            t = np.full(len(A), c % p, dtype=np.int64)
            for i, k in enumerate(e):
                if k:
                    t = t * pw[i][k] % p
            acc = (acc + t) % p
        H[:, j] = acc
    # H = lam * A  <=>  all 2x2 minors of the pair (H, A) vanish
    ok = np.ones(len(A), dtype=bool)
    for i in range(10):
        for j in range(i + 1, 10):
            ok &= (H[:, i] * A[:, j] - H[:, j] * A[:, i]) % p == 0
    return ok


def splits_completely(C: PlaneCubic) -> bool:
    """splits_into_lines, with characteristic 3 sent to the oracle."""
    if _require_prime(C) == 3:
        return splits_into_lines_oracle(C)
    return splits_into_lines(C)


# -- exhaustive oracle --------------------------------------------------------

def _cross(T, P, Q):
    mul, sub = T.mul, T.sub
    a = sub[mul[P[:, 1], Q[:, 2]], mul[P[:, 2], Q[:, 1]]]
    b = sub[mul[P[:, 2], Q[:, 0]], mul[P[:, 0], Q[:, 2]]]
    c = sub[mul[P[:, 0], Q[:, 1]], mul[P[:, 1], Q[:, 0]]]
    return np.stack([a, b, c], axis=1)


def _normalize(T, L):
    lead = np.where(L[:, 0] != 0, L[:, 0], np.where(L[:, 1] != 0, L[:, 1], L[:, 2]))
    inv = T.inv[lead]
    return T.mul[L, inv[:, None]]


def _component_lines(C: PlaneCubic, k: int):
    """Lines over F_{p^k} contained in C, as normalized index triples."""
    p = C.p
    T = field_tables(p, k)
    pts, cubic, _ = _point_monomials(p, k)
    acc = np.zeros(len(pts), dtype=np.int32)
    for c, m in zip(C.coeffs, cubic):
        if c:
            acc = T.add[acc, T.mul[c, m]]
    Z = pts[acc == 0]
    n = len(Z)
    if n < 4:
        return []
    i, j = np.triu_indices(n, 1)
    L = _normalize(T, _cross(T, Z[i], Z[j]))
    q = T.q
    code = (L[:, 0].astype(np.int64) * q + L[:, 1]) * q + L[:, 2]
    uniq, counts = np.unique(code, return_counts=True)
    # a line meeting C in m points shows up in m(m-1)/2 pairs; components have q+1 >= 5
    lines = uniq[counts >= 6]
    return [(int(v // (q * q)), int(v // q % q), int(v % q)) for v in lines]


def _is_cube_of(C: PlaneCubic, line, k: int) -> bool:
    T = field_tables(C.p, k)
    K = T.K
    a, b, c = (K.from_index(v) for v in line)
    x, y, z = MultiPoly.gens(XYZ)
    L3 = (x * a + y * b + z * c) ** 3
    cube = [L3.terms.get(m, K.zero) for m in MONOMIALS]
    cube = [K(v) if isinstance(v, int) else v for v in cube]
    mine = C.over(K)
    i = next(i for i, v in enumerate(mine) if v)
    if not cube[i]:
        return False
    lam = mine[i] / cube[i]
    return all(u == lam * v for u, v in zip(mine, cube))


def _rational_line_path(C: PlaneCubic) -> bool:
    """Large p: peel off an F_p-rational line, then ask whether the conic is singular."""
    from .points import line_divides, rational_lines

    p = C.p
    for line in rational_lines(p):
        if line_divides(C, line):
            break
    else:
        raise SearchSpaceTooLarge(f"p={p} exceeds the exhaustive bound and C has no F_p-line")
    K = prime_field(p)
    x, y, z = MultiPoly.gens(XYZ)
    F = MultiPoly(XYZ, dict(zip(MONOMIALS, C.over(K))))
    Lp = x * K(line[0]) + y * K(line[1]) + z * K(line[2])
    Q = F.exact_quotient(Lp)
    grads = [Q.diff(v) for v in XYZ]
    # a conic splits over the closure iff it has a singular point, which is then F_p-rational
    cols = np.array(list(_all_points(p)), dtype=np.int64)
    vals = [_eval_int(g, cols, p) for g in [Q] + grads]
    return bool(np.any(np.all(np.stack(vals) == 0, axis=0)))


def _all_points(p):
    from .cubic import projective_points

    return projective_points(p)


def _eval_int(f: MultiPoly, pts, p):
    acc = np.zeros(len(pts), dtype=np.int64)
    for e, c in f.terms.items():
        t = np.full(len(pts), int(c.r[0]) if hasattr(c, "r") else int(c), dtype=np.int64) % p
        for i, k in enumerate(e):
            for _ in range(k):
                t = t * pts[:, i] % p
        acc = (acc + t) % p
    return acc


def splits_into_lines_oracle(C: PlaneCubic) -> bool:
    """Exhaustive check: is C a product of lines defined over F_{p^2} or F_{p^3}?

    Lines of a split cubic form Galois orbits of size at most 3, so the lines
    of a split cubic are all defined over F_{p^2} or over F_{p^3}.
    """
    p = _require_prime(C)
    if p > ORACLE_MAX_P:
        return _rational_line_path(C)
    for k in (2, 3):
        lines = _component_lines(C, k)
        if len(lines) >= 2:
            return True
        if len(lines) == 1 and _is_cube_of(C, lines[0], k):
            return True
    return False
