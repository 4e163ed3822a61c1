import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from hassecubic.family.objects import DEFAULT_CONSTANTS, binary_cubic, dehomogenized_fiber
from hassecubic.polyring import (
    DegreeTooSmall,
    EliminationDegenerate,
    Inconclusive,
    MultiPoly,
    UniPoly,
    Witness,
    ZeroPolynomial,
    certify_irreducible,
    discriminant,
    eliminate_singular_locus,
    factor_mod_p,
    factor_over_Q,
    gcd_and_squarefree_part,
    is_irreducible_over_Q,
    resultant,
)
from hassecubic.polyring import modp
from hassecubic.polyring.elimination import eliminate_singular_locus_detailed
from hassecubic.polyring.unipoly import resultant as uni_resultant

S12 = DEFAULT_CONSTANTS.singular12_poly()
coeff_lists = st.lists(st.integers(-20, 20), min_size=2, max_size=7).filter(lambda c: c[-1] != 0)


# -- resultants and discriminants ------------------------------------------------

def test_resultant_examples():
    x, a, b = MultiPoly.gens(("x", "a", "b"))
    assert resultant(x**2 - 2, x - 3, "x").constant_value() == 7
    assert resultant(x - a, x - b, "x") == a - b
    with pytest.raises(ZeroPolynomial):
        resultant(MultiPoly(("x",), {}), x, "x")


def test_resultant_of_h_at_u0_is_nonzero():
    h = dehomogenized_fiber()
    h0 = h.subs({"u": 0})
    r = resultant(h0, h0.diff("x"), "x")
    assert not r.is_zero() and r.degree("y") > 0


@given(coeff_lists, coeff_lists)
def test_resultant_antisymmetry_and_sympy(f, g):
    F, G = UniPoly(f), UniPoly(g)
    sign = (-1) ** (F.degree() * G.degree())
    assert uni_resultant(F, G) == sign * uni_resultant(G, F)
    X = sp.Symbol("x")
    expect = sp.resultant(sp.Poly(f[::-1], X), sp.Poly(g[::-1], X))
    assert uni_resultant(F, G) == int(expect)


def test_discriminant_examples():
    assert discriminant(binary_cubic()) == 242325
    assert discriminant(UniPoly([1, 0, 1])) == -4
    assert discriminant(S12) == 2**146 * 3**92 * 5**50 * 359**4
    with pytest.raises(DegreeTooSmall):
        discriminant(UniPoly([1, 1]))


def test_discriminant_matches_sympy_on_singular12():
    u = sp.Symbol("u")
    f = sum(c * u**i for i, c in enumerate(S12.coeffs))
    assert sp.discriminant(f, u) == discriminant(S12)


@given(coeff_lists.filter(lambda c: len(c) >= 3))
def test_discriminant_zero_iff_repeated_factor(cs):
    f = UniPoly(cs)
    g, _ = gcd_and_squarefree_part(f)
    assert (discriminant(f) == 0) == (g.degree() > 0)


@given(coeff_lists.filter(lambda c: len(c) >= 3))
def test_discriminant_matches_sympy(cs):
    X = sp.Symbol("x")
    assert discriminant(UniPoly(cs)) == sp.discriminant(sp.Poly(cs[::-1], X))


# -- gcd, squarefree part, factoring mod p ---------------------------------------

def test_squarefree_examples():
    x = UniPoly([0, 1])
    g, sf = gcd_and_squarefree_part(x * x * (x + 1))
    assert sf == x * (x + 1) and g == x
    g7, _ = gcd_and_squarefree_part(S12.reduce(7))
    assert g7.degree() == 0
    g3, _ = gcd_and_squarefree_part(S12.reduce(3))
    assert g3.degree() > 0


def test_factor_mod_p_examples():
    facs = factor_mod_p(UniPoly([1, 0, 1]), 5)
    assert sorted(g.coeffs for g, _ in facs) == [(2, 1), (3, 1)]
    facs = factor_mod_p(UniPoly([0, -1, 0, 1]), 3)
    assert sorted(g.coeffs for g, _ in facs) == [(0, 1), (1, 1), (2, 1)]


def _rebuild(f: UniPoly, facs, p):
    out = UniPoly([f.reduce(p).lc], f.var, p)
    for g, e in facs:
        out = out * g**e
    return out


@given(st.lists(st.integers(0, 12), min_size=2, max_size=10).filter(lambda c: c[-1] % 13),
       st.sampled_from([2, 3, 5, 7, 13]))
def test_factor_mod_p_reconstructs(cs, p):
    f = UniPoly(cs).reduce(p)
    if f.degree() < 1:
        return
    facs = factor_mod_p(f, p, random.Random(1))
    assert _rebuild(f, facs, p) == f
    for g, _ in facs:
        assert modp.is_irreducible(list(g.coeffs), p)


@pytest.mark.parametrize("p", [7, 11, 13])
def test_factor_mod_p_matches_sympy(p):
    X = sp.Symbol("u")
    expr = sum(c * X**i for i, c in enumerate(S12.coeffs))
    _, sym = sp.factor_list(expr, modulus=p)
    ours = factor_mod_p(S12, p, random.Random(0))
    assert sorted((g.degree(), e) for g, e in ours) == sorted((sp.degree(q, X), e) for q, e in sym)


# -- irreducibility ---------------------------------------------------------------

def test_irreducibility_examples():
    assert is_irreducible_over_Q(UniPoly([-2, 0, 1])) == Witness(3)
    res = is_irreducible_over_Q(UniPoly([-1, 0, 1]), 200)
    assert isinstance(res, Inconclusive) and not res


def test_singular12_has_no_witness_below_200():
    # singular12 = g(u^3) with Gal(g) a Klein four-group, which has no 4-cycle, so no reduction is irreducible
    res = is_irreducible_over_Q(S12, 200)
    assert isinstance(res, Inconclusive)
    assert all(pat != (12,) for _, pat in res.patterns)


def test_singular12_certificate():
    cert = certify_irreducible(S12)
    assert cert is not None and cert.replay()
    assert cert.prime == 7 and [len(g) - 1 for g in cert.lifted_factors] == [6, 6]
    # tampering with a lifted factor breaks the replay
    bad = cert.lifted_factors[0][:-2] + (cert.lifted_factors[0][-2] + 1, cert.lifted_factors[0][-1])
    forged = type(cert)(cert.polynomial, cert.prime, cert.exponent, cert.bound, (bad,) + cert.lifted_factors[1:],
                        cert.subsets_tested)
    assert not forged.replay()


def test_certificate_refuses_reducible():
    x = UniPoly([0, 1])
    f = (x**2 - 2) * (x**3 + x + 1)
    assert certify_irreducible(f) is None


def test_factor_over_Q_matches_sympy(rng):
    X = sp.Symbol("x")
    for _ in range(8):
        parts = [UniPoly([rng.randint(-5, 5) for _ in range(rng.randint(2, 4))] + [rng.choice([1, 2, -3])])
                 for _ in range(3)]
        f = parts[0] * parts[1] * parts[1] * parts[2]
        content, facs = factor_over_Q(f)
        expr = sum(c * X**i for i, c in enumerate(f.coeffs))
        _, sym = sp.factor_list(expr)
        assert sorted((g.degree(), e) for g, e in facs) == sorted((sp.degree(q, X), e) for q, e in sym if sp.degree(q, X) > 0)
        back = UniPoly([content])
        for g, e in facs:
            back = back * g**e
        assert back == f


# -- elimination -----------------------------------------------------------------

def test_eliminant_of_family_is_singular12():
    res = eliminate_singular_locus_detailed(dehomogenized_fiber())
    assert res.polynomial == S12 or res.polynomial == -S12
    assert res.resultant_degrees == (72, 72, 90)
    assert [q.coeffs for q in res.rejected] == [(225, 0, 0, 1680, 0, 0, 256)]


def test_eliminant_small_examples():
    x, y, u = MultiPoly.gens(("x", "y", "u"))
    assert eliminate_singular_locus(x**2 + y**2 + u) == UniPoly([0, 1], "u")
    assert eliminate_singular_locus(x**3 + y**3 + 1 + u * 0).degree() == 0


def test_eliminant_degenerate():
    x, y, u = MultiPoly.gens(("x", "y", "u"))
    with pytest.raises(EliminationDegenerate):
        eliminate_singular_locus((x + y) ** 2 + 0 * u)


def _affine_solutions(h: MultiPoly, ubar: int, p: int):
    hs = [h, h.diff("x"), h.diff("y")]
    out = []
    for a in range(p):
        for b in range(p):
            pt = {"x": a, "y": b, "u": ubar}
            if all(Fraction(q.evaluate(pt)).numerator % p == 0 for q in hs):
                out.append((a, b))
    return out


@pytest.mark.parametrize("p", [31, 41])
def test_eliminant_root_set_by_exhaustive_search(p):
    h = dehomogenized_fiber()
    f = S12.reduce(p)
    roots = [r for r in range(p) if f(r) == 0]
    assert roots
    for r in roots:
        assert len(_affine_solutions(h, r, p)) == 1
    rng = random.Random(p)
    others = rng.sample([r for r in range(p) if f(r)], 20)
    for r in others:
        assert _affine_solutions(h, r, p) == []
