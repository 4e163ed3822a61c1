import pytest
from hypothesis import given
from hypothesis import strategies as st

from hassecubic.padic import (
    AtLeastPrecision,
    PadicInt,
    PrecisionExhausted,
    SlopeConditionFailed,
    hensel_lift,
    valuation,
    vp_int,
)
from hassecubic.polyring import UniPoly


def test_lift_exact_root():
    c = hensel_lift(UniPoly([-5, 1]), 7, 5, 4)
    assert c.residue == 5 and c.replay()


def test_lift_square_root_of_two_mod_343():
    c = hensel_lift(UniPoly([-2, 0, 1]), 7, 3, 3)
    brute = [a for a in range(343) if (a * a - 2) % 343 == 0 and a % 7 == 3]
    assert [c.residue] == brute


def _fiber_at_y2_z1(u: int) -> UniPoly:
    # 5x^3 + 9*2^3 + 10 + 12u^3 (x + 3)^3
    x = UniPoly([0, 1])
    return x**3 * 5 + 82 + (x + 3) ** 3 * (12 * u**3)


def test_mod9_point_needs_a_better_start():
    f = _fiber_at_y2_z1(1)
    assert f(1) % 9 == 0
    # from a0 = 1 the slope condition is not met: f(1) and f'(1) are both only divisible by 9 and 3
    with pytest.raises(SlopeConditionFailed) as e:
        hensel_lift(f, 3, 1, 5)
    assert (e.value.val_f, e.value.val_df) == (vp_int(f(1), 3), vp_int(f.derivative()(1), 3))
    c = hensel_lift(f, 3, 7, 5)
    assert c.residue % 3 == 1 and vp_int(f(c.residue), 3, 5) >= 5 and c.replay()


def test_precision_limit():
    with pytest.raises(PrecisionExhausted):
        hensel_lift(UniPoly([-5, 1]), 7, 5, 10**6)


def test_valuation_examples():
    assert valuation(PadicInt(3, 5, 18)) == 2
    assert valuation(PadicInt(3, 5, 0)) == AtLeastPrecision(5)
    assert valuation(PadicInt(5, 4, 375)) == 3


@given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9), st.sampled_from([2, 3, 5, 7, 359]), st.integers(1, 12))
def test_reduction_is_a_ring_homomorphism(a, b, p, N):
    A, B = PadicInt.from_int(a, p, N), PadicInt.from_int(b, p, N)
    assert (A + B).residue == (a + b) % p**N
    assert (A * B).residue == (a * b) % p**N
    assert (A - B).residue == (a - b) % p**N


@given(st.integers(0, 10**6), st.sampled_from([3, 5, 7, 11]), st.integers(2, 10))
def test_lifts_are_unique_and_replay(seed, p, N):
    # roots of x^2 - a for a quadratic residue a mod p
    r = seed % (p - 1) + 1
    a = r * r + p * (seed // p)
    f = UniPoly([-a, 0, 1])
    c1 = hensel_lift(f, p, r, N)
    c2 = hensel_lift(f, p, r + p, N)
    assert c1.residue == c2.residue and c1.replay()
    assert vp_int(f(c1.residue), p, N) >= N
