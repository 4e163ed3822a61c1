"""Re-derive the degree-4 and degree-6 invariants of ternary cubics from scratch.

An SL_3-invariant of the coefficients (a_0, ..., a_9) has torus weight zero and
is killed by the six derivations induced by the shears x_j -> x_j + e x_i.  We
solve that linear system exactly over Q and normalise on the Hesse pencil
x^3 + y^3 + z^3 + 6m xyz, where S = m - m^4 and T = 1 - 20m^3 - 8m^6.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

from ..cubicgeom.cubic import MONOMIALS

HESSE_S = {1: Fraction(1), 4: Fraction(-1)}
HESSE_T = {0: Fraction(1), 3: Fraction(-20), 6: Fraction(-8)}


def weight_zero_monomials(degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors over the 10 coefficients with total multidegree (d, d, d)."""
    out = []
    for combo in combinations_with_replacement(range(10), degree):
        w = [0, 0, 0]
        for i in combo:
            for v in range(3):
                w[v] += MONOMIALS[i][v]
        if w == [degree] * 3:
            e = [0] * 10
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def _shear_image(i: int, j: int):
    """For the shear derivation D_ij: list of (target index, source index, factor)."""
    index = {m: k for k, m in enumerate(MONOMIALS)}
    out = []
    for k, m in enumerate(MONOMIALS):
        if m[i] == 0:
            continue
        src = list(m)
        src[i] -= 1
        src[j] += 1
        out.append((k, index[tuple(src)], m[j] + 1))
    return out


def _apply(D, mono: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for tgt, src, fac in D:
        if mono[tgt] == 0:
            continue
        e = list(mono)
        c = e[tgt] * fac
        e[tgt] -= 1
        e[src] += 1
        key = tuple(e)
        out[key] = out.get(key, 0) + c
    return out


def _nullspace(rows: list[dict[int, int]], n: int) -> list[list[Fraction]]:
    """Basis of {v : row . v = 0 for all rows} over Q (rows sparse)."""
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        r = {k: Fraction(v) for k, v in row.items() if v}
        for col, prow in pivots.items():
            if col in r:
                f = r[col]
                for k, v in prow.items():
                    r[k] = r.get(k, 0) - f * v
                    if not r[k]:
                        del r[k]
        if not r:
            continue
        col = min(r)
        inv = 1 / r[col]
        r = {k: v * inv for k, v in r.items()}
        for c2, prow in pivots.items():
            if col in prow:
                f = prow[col]
                for k, v in r.items():
                    prow[k] = prow.get(k, 0) - f * v
                    if not prow[k]:
                        del prow[k]
        pivots[col] = r
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * n
        v[fcol] = Fraction(1)
        for col, prow in pivots.items():
            v[col] = -prow.get(fcol, 0)
        basis.append(v)
    return basis


def _hesse_values(table: dict[tuple[int, ...], Fraction]) -> dict[int, Fraction]:
    """The invariant on x^3 + y^3 + z^3 + 6m xyz, as {power of m: coefficient}."""
    hesse = {0: 1, 6: 1, 9: 1}  # x^3, y^3, z^3; xyz (index 4) carries 6m
    out: dict[int, Fraction] = {}
    for e, c in table.items():
        if any(e[k] for k in range(10) if k not in hesse and k != 4):
            continue
        out[e[4]] = out.get(e[4], 0) + c * 6 ** e[4]
    return {k: v for k, v in out.items() if v}


def derive_invariant(degree: int) -> dict[tuple[int, ...], Fraction]:
    """The unique (up to scale) invariant of the given degree, normalised on the Hesse pencil."""
    target = {4: HESSE_S, 6: HESSE_T}[degree]
    monos = weight_zero_monomials(degree)
    col = {m: k for k, m in enumerate(monos)}
    rows: dict[tuple, dict[int, int]] = {}
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            D = _shear_image(i, j)
            eqs: dict[tuple, dict[int, int]] = {}
            for m in monos:
                for img, c in _apply(D, m).items():
                    eqs.setdefault(img, {})[col[m]] = eqs.get(img, {}).get(col[m], 0) + c
            for img, row in eqs.items():
                rows[(i, j, img)] = row
    basis = _nullspace(list(rows.values()), len(monos))
    if len(basis) != 1:
        raise AssertionError(f"expected a one-dimensional space of degree-{degree} invariants, got {len(basis)}")
    table = {m: c for m, c in zip(monos, basis[0]) if c}
    vals = _hesse_values(table)
    k = next(iter(target))
    scale = target[k] / vals[k]
    table = {m: c * scale for m, c in table.items()}
    if _hesse_values(table) != target:
        raise AssertionError("invariant is not proportional to the Hesse normal form")
    return dict(sorted(table.items()))


def render_table(table: dict[tuple[int, ...], Fraction]) -> str:
    """The plain-text data format: one 'e0 ... e9 coefficient' line per term."""
    return "".join(" ".join(map(str, e)) + f" {c}\n" for e, c in table.items())
