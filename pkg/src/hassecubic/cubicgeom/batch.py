"""Vectorised scans over many cubics at once (numpy, integer arithmetic mod p)."""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .cubic import MONOMIALS, projective_points


@lru_cache(maxsize=None)
def _tables(p: int):
    pts = np.array(list(projective_points(p)), dtype=np.int64)
    mono = np.stack([pts[:, 0] ** i * pts[:, 1] ** j * pts[:, 2] ** k % p for i, j, k in MONOMIALS], axis=1)
    # d/dx_v of each monomial, as (coefficient multiplier, monomial values of the derivative)
    grads = []
    for v in range(3):
        mult = np.array([m[v] for m in MONOMIALS], dtype=np.int64)
        vals = []
        for m in MONOMIALS:
            e = list(m)
            e[v] = max(e[v] - 1, 0)
            vals.append(pts[:, 0] ** e[0] * pts[:, 1] ** e[1] * pts[:, 2] ** e[2] % p)
        grads.append((mult, np.stack(vals, axis=1)))
    return pts, mono, grads


def random_cubics(p: int, n: int, rng: np.random.Generator) -> np.ndarray:
    """n uniformly random nonzero coefficient vectors mod p."""
    out = rng.integers(0, p, size=(n, 10))
    zero = ~out.any(axis=1)
    while zero.any():
        out[zero] = rng.integers(0, p, size=(int(zero.sum()), 10))
        zero = ~out.any(axis=1)
    return out


def all_cubics(p: int) -> np.ndarray:
    """Every nonzero coefficient vector mod p (p^10 - 1 rows)."""
    grid = np.indices((p,) * 10).reshape(10, -1).T
    return grid[grid.any(axis=1)]


def values(coeffs: np.ndarray, p: int) -> np.ndarray:
    _, mono, _ = _tables(p)
    return (np.asarray(coeffs, dtype=np.int64) @ mono.T) % p


def count_points_batch(coeffs: np.ndarray, p: int) -> np.ndarray:
    return (values(coeffs, p) == 0).sum(axis=1)


def smooth_point_mask(coeffs: np.ndarray, p: int) -> np.ndarray:
    """(n, points) mask of smooth F_p-points."""
    A = np.asarray(coeffs, dtype=np.int64)
    _, _, grads = _tables(p)
    on = values(A, p) == 0
    nonsing = np.zeros_like(on)
    for mult, vals in grads:
        nonsing |= ((A * mult) @ vals.T) % p != 0
    return on & nonsing


def has_smooth_point_batch(coeffs: np.ndarray, p: int) -> np.ndarray:
    return smooth_point_mask(coeffs, p).any(axis=1)


def first_smooth_point_batch(coeffs: np.ndarray, p: int) -> list:
    """Per cubic, the first smooth F_p-point in scan order, or None."""
    pts, _, _ = _tables(p)
    mask = smooth_point_mask(coeffs, p)
    first = mask.argmax(axis=1)
    return [tuple(int(c) for c in pts[i]) if mask[r, i] else None for r, i in enumerate(first)]
