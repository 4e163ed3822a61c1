"""Sylvester resultants via fraction-free (Bareiss) elimination."""
from __future__ import annotations

from .multipoly import MultiPoly, ZeroPolynomial, exact_div


def _exdiv(a, b):
    if isinstance(a, MultiPoly):
        return a.exact_quotient(b)
    return exact_div(a, b)


def bareiss_det(matrix):
    """Determinant of a square matrix over an integral domain, exact."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0 * m[0][0]
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                num = row_i[j] * pivot - mik * row_k[j]
                row_i[j] = _exdiv(num, prev) if num else num
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def sylvester_matrix(f_coeffs, g_coeffs, zero=0):
    """Coefficient lists are highest degree first."""
    m, n = len(f_coeffs) - 1, len(g_coeffs) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(f_coeffs) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(g_coeffs) + [zero] * (size - n - 1 - i))
    return rows


def resultant(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Res_var(f, g): determinant of the Sylvester matrix, f's rows first.

    A factor of degree zero in ``var`` is allowed: Res(c, g) = c^deg(g).
    """
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant of a zero polynomial")
    if f.vars != g.vars:
        raise ValueError("variable mismatch")
    cf, cg = f.coefficients_in(var), g.coefficients_in(var)
    m, n = max(cf), max(cg)
    zero = MultiPoly(f.vars)
    if m == 0:
        return cf[0] ** n
    if n == 0:
        return cg[0] ** m
    fl = [cf.get(k, zero) for k in range(m, -1, -1)]
    gl = [cg.get(k, zero) for k in range(n, -1, -1)]
    det = bareiss_det(sylvester_matrix(fl, gl, zero))
    if not isinstance(det, MultiPoly):
        det = MultiPoly.const(det, f.vars)
    return det
