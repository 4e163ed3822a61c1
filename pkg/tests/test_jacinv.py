import hashlib
import random
from fractions import Fraction
from importlib import resources

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hassecubic.cubicgeom import PlaneCubic, classify_degeneration
from hassecubic.cubicgeom.batch import random_cubics
from hassecubic.family.objects import A_of_t, B_of_t, DEFAULT_CONSTANTS, build_fiber, tfiber_model, u_of_t
from hassecubic.galoisfield import build_extension, roots_in_field
from hassecubic.jacinv import (
    C_A,
    C_B,
    BadCharacteristic,
    SingularCubic,
    SingularCurve,
    WeierstrassCurve,
    aronhold_invariants,
    invariant_discriminant,
    j_invariant,
    jacobian_weierstrass,
    weierstrass_discriminant,
)
from hassecubic.jacinv import invariants as inv_mod
from hassecubic.jacinv.derive import derive_invariant, render_table
from hassecubic.polyring import MultiPoly, UniPoly

small = st.integers(-6, 6)
cubic_coeffs = st.lists(small, min_size=10, max_size=10).filter(any)


def _random_matrix(rng, lo=-3, hi=3, unimodular=False):
    while True:
        M = [[rng.randint(lo, hi) for _ in range(3)] for _ in range(3)]
        d = (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
             + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))
        if d and (not unimodular or d == 1):
            return M, d


def test_tables_rederive():
    for name, deg in (("S", 4), ("T", 6)):
        table = dict(inv_mod.load_table(name))
        assert table == derive_invariant(deg)
        assert len(table) == {4: 25, 6: 103}[deg]


def test_table_checksums():
    for name in ("S", "T"):
        raw = resources.files("hassecubic.jacinv").joinpath("data").joinpath(f"aronhold_{name}.txt").read_bytes()
        assert hashlib.sha256(raw).hexdigest() == inv_mod.CHECKSUMS[name]


def test_checksum_mismatch_is_detected(monkeypatch):
    inv_mod.load_table.cache_clear()
    monkeypatch.setitem(inv_mod.CHECKSUMS, "S", "0" * 64)
    try:
        with pytest.raises(inv_mod.ChecksumMismatch):
            inv_mod.load_table("S")
    finally:
        inv_mod.load_table.cache_clear()


def test_render_roundtrip():
    table = derive_invariant(4)
    body = [ln for ln in render_table(table).splitlines() if ln and not ln.startswith("#")]
    assert len(body) == 25


def test_hesse_normalization():
    for m in (Fraction(0), Fraction(1), Fraction(-2, 3), Fraction(5)):
        C = PlaneCubic.from_dict({"x^3": 1, "y^3": 1, "z^3": 1, "xyz": 6 * m})
        I = aronhold_invariants(C)
        assert I.S == m - m**4 and I.T == 1 - 20 * m**3 - 8 * m**6


def test_calibration_constants():
    assert C_A == 27 and C_B == Fraction(-27, 4)


def test_diagonal_cubic():
    C = PlaneCubic.from_dict({"x^3": 5, "y^3": 9, "z^3": 10})
    assert aronhold_invariants(C).S == 0
    assert jacobian_weierstrass(C).A == 0


@given(cubic_coeffs, st.integers(0, 10**6))
def test_invariance_under_unimodular_substitution(cs, seed):
    C = PlaneCubic(cs)
    M, _ = _random_matrix(random.Random(seed), unimodular=True)
    assert aronhold_invariants(C.substitute(M)) == aronhold_invariants(C)


@given(cubic_coeffs, st.fractions(max_denominator=7).filter(bool))
def test_weight_scaling(cs, lam):
    C = PlaneCubic(cs)
    I, J = aronhold_invariants(C), aronhold_invariants(C.scale(lam))
    assert J.S == lam**4 * I.S and J.T == lam**6 * I.T


def test_bad_characteristic():
    for p in (2, 3):
        with pytest.raises(BadCharacteristic):
            aronhold_invariants(PlaneCubic.from_dict({"x^3": 1, "y^3": 1, "z^3": 1}, p))


# classification scans P^2(F_{p^3}), so the sample shrinks as p grows
@pytest.mark.parametrize("p,n_random,n_forced", [(5, 400, 100), (7, 200, 60), (11, 25, 15)])
def test_discriminant_detects_singular_cubics(p, n_random, n_forced):
    import numpy as np

    rng = np.random.default_rng(p)
    cs = list(random_cubics(p, n_random, rng))
    r = random.Random(p)
    for _ in range(n_forced):  # force a singular point at (0:0:1): no z^3, xz^2, yz^2 terms
        c = [r.randrange(p) for _ in range(10)]
        c[5] = c[8] = c[9] = 0
        if any(c):
            cs.append(c)
    for c in cs:
        C = PlaneCubic(c, p)
        assert (invariant_discriminant(C) == 0) == (classify_degeneration(C).kind != "smooth")


def test_family_model_symbolic():
    G, d = tfiber_model()
    W = jacobian_weierstrass(G, check=False).rescale(d * d)
    assert W.A == A_of_t()
    assert W.B == B_of_t()
    assert W.B.degree() == 72 and sum(1 for c in W.B.coeffs if c) == 19


def test_family_model_at_zero():
    W = jacobian_weierstrass(build_fiber(u_of_t(0)))
    assert (W.A, W.B) == (145800, -6129675)


@pytest.mark.parametrize("t", [Fraction(0), Fraction(1), Fraction(2), Fraction(-1), Fraction(1, 2)])
def test_j_compatibility(t):
    direct = j_invariant(jacobian_weierstrass(build_fiber(u_of_t(t))))
    tabulated = j_invariant(WeierstrassCurve(A_of_t()(t), B_of_t()(t)))
    assert direct == tabulated


def test_j_examples():
    assert j_invariant(WeierstrassCurve(1, 0)) == 1728
    assert j_invariant(WeierstrassCurve(0, 1)) == 0
    with pytest.raises(SingularCurve):
        j_invariant(WeierstrassCurve(-3, 2))
    A, B = A_of_t(), B_of_t()
    j0 = j_invariant(WeierstrassCurve(A(0), B(0)))
    j2 = j_invariant(WeierstrassCurve(A(Fraction(2)), B(Fraction(2))))
    assert j0 != j2


def test_weierstrass_discriminant_examples():
    assert weierstrass_discriminant(WeierstrassCurve(0, 0)) == 0
    assert weierstrass_discriminant(WeierstrassCurve(-3, 2)) == 0
    A, B = A_of_t(), B_of_t()
    assert weierstrass_discriminant(WeierstrassCurve(A(1), B(1))) != 0


def test_singular_cubic_rejected():
    with pytest.raises(SingularCubic):
        jacobian_weierstrass(PlaneCubic.from_dict({"y^2z": 1, "x^3": -1, "x^2z": -1}))


def test_j_invariant_under_pgl3(rng):
    done = 0
    while done < 15:
        C = PlaneCubic([rng.randint(-4, 4) for _ in range(10)])
        if not any(C.coeffs) or invariant_discriminant(C) == 0:
            continue
        M, _ = _random_matrix(rng)
        j1 = j_invariant(jacobian_weierstrass(C))
        j2 = j_invariant(jacobian_weierstrass(C.substitute(M)))
        assert j1 == j2
        done += 1


def test_discriminant_vanishes_exactly_at_singular_values_mod_7(rng):
    f = DEFAULT_CONSTANTS.singular12_poly()
    K = build_extension(7, 12)
    roots = {r for r, _ in roots_in_field(f, K)}

    def fiber(ub):
        c = ub**3 * 12
        return PlaneCubic([K(d) + c * m for d, m in zip((5, 0, 0, 0, 0, 0, 9, 0, 0, 10), (1, 3, 3, 3, 6, 3, 1, 3, 3, 1))])

    for r in roots:
        assert not invariant_discriminant(fiber(r))
    others = 0
    while others < 20:
        a = K.random(rng)
        if a in roots:
            continue
        assert invariant_discriminant(fiber(a))
        others += 1
