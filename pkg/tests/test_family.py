import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hassecubic.family.checks import fiber_local_point, verify_residue_conditions, verify_structural_u_map
from hassecubic.family.claims import (
    ASSUMED,
    FAILED,
    UNKNOWN,
    VERIFIED,
    ConfigError,
    FamilyConfig,
    UnknownClaimId,
    claim_ids,
    verify_all,
    verify_claim,
    with_constants,
)
from hassecubic.family.objects import (
    DEFAULT_CONSTANTS,
    INFINITY,
    A_of_t,
    B_of_t,
    build_fiber,
    second_chart,
    tfiber_model,
    u_of_t,
)

SMALL = FamilyConfig(p_min=7, p_max=30)


def test_u_of_t_values():
    assert u_of_t(0) == 1
    assert u_of_t(INFINITY) == 1
    assert u_of_t(1) == 1 and u_of_t(-1) == 1
    assert u_of_t(2) == Fraction(4079, 3839)


def test_fibers():
    assert build_fiber(0).coeffs == tuple(Fraction(c) for c in (5, 0, 0, 0, 0, 0, 9, 0, 0, 10))
    W1 = build_fiber(1)
    assert W1.coeffs[4] == 72 and W1.coeffs[0] == 17 and W1.coeffs[9] == 22
    G, d = tfiber_model()
    assert d.degree() == 12 and all(c.degree() == 36 for c in (G.coeffs[0], G.coeffs[4]))
    assert G.coeffs[1](Fraction(2)) == 36 * 4079**3


def test_infinite_fiber_chart():
    W = build_fiber(INFINITY)
    assert W.coeffs == (-5, -30, 0, -30, 0, 0, -1, 0, 0, 12)


def test_second_chart_matches_fiber():
    r = Fraction(3, 7)
    G, W = second_chart(r), build_fiber(1 / r)
    for x, y, w in [(1, 0, 0), (0, 1, 0), (1, 2, 3), (-2, 5, 1)]:
        assert G(x, y, w) == W(x, y, r * w - x - y)


@pytest.mark.parametrize("t", [0, 1, 2, -1, Fraction(1, 2), 3, 7, Fraction(-5, 11)])
def test_residue_conditions_hold(t):
    rep = verify_residue_conditions(t)
    assert rep.ok, rep.as_dict()
    assert [row[0] for row in rep.breakdown] == [2, 3, 5, 359]


@given(st.fractions().filter(lambda t: t.denominator < 10**6))
def test_residue_conditions_for_random_t(t):
    assert verify_residue_conditions(t).ok


def test_structural_report():
    rep = verify_structural_u_map()
    assert rep.ok
    assert rep.fourth_powers[5] == ["0", "1", "oo"]
    assert rep.denominator_roots_mod_359 == ()
    assert set(rep.v_map_values.values()) == {1}


@pytest.mark.parametrize("u,p", [(1, 2), (1, 3), (1, 5), (u_of_t(2), 3), (Fraction(4079, 3839), 11)])
def test_fiber_local_points_replay(u, p):
    fp = fiber_local_point(u, p, 8)
    assert fp.solvable and fp.replay()
    if p == 11:
        assert fp.chart == "second"


def test_second_chart_used_for_negative_valuation():
    fp = fiber_local_point(Fraction(1, 7), 7, 6)
    assert fp.chart == "second" and fp.replay()
    assert fiber_local_point(Fraction(2), 7, 6).chart == "first"


def test_config_validation():
    for bad in (dict(p_min=1), dict(p_min=50, p_max=10), dict(precision=0), dict(jobs=0), dict(t_samples=())):
        with pytest.raises(ConfigError):
            FamilyConfig(**bad)


def test_sweep_excludes_bad_primes():
    sweep = FamilyConfig(p_min=2, p_max=400).sweep
    assert not set(sweep) & {2, 3, 5, 359}
    assert 7 in sweep and 353 in sweep and 367 in sweep


def test_claim_ids():
    assert claim_ids() == [f"C{i}" for i in range(1, 15)]
    with pytest.raises(UnknownClaimId):
        verify_claim("C99")
    with pytest.raises(UnknownClaimId):
        verify_all(ids=["C1", "C0"])


def test_c1_evidence():
    r = verify_claim("C1")
    assert r.verdict == VERIFIED
    assert r.evidence["discriminant"] == "242325" and r.evidence["factorization"] == "3^3 * 5^2 * 359"


def test_c14_is_external():
    r = verify_claim("C14", SMALL)
    assert r.verdict == ASSUMED


def test_c7_small_sweep():
    r = verify_claim("C7", FamilyConfig(p_min=7, p_max=7))
    assert r.verdict == VERIFIED


def test_c4_uses_recombination_certificate():
    r = verify_claim("C4")
    assert r.verdict == VERIFIED
    assert "7" in json.dumps(r.evidence)


def test_jacobian_polys():
    A, B = A_of_t(), B_of_t()
    assert A.degree() == 48 and B.degree() == 72
    assert A(0) == 145800


@pytest.mark.parametrize(
    "cid,change",
    [
        ("C1", dict(c1_discriminant=242326)),
        ("C1", dict(c1_factorization=((3, 2), (5, 2), (359, 1)))),
        ("C2", dict(singular12=(50624,) + DEFAULT_CONSTANTS.singular12[1:])),
        ("C3", dict(singular12_disc_factorization=((2, 146), (3, 92), (5, 50), (359, 3)))),
        ("C12", dict(a_scalar=145801)),
        ("C12", dict(b_table=((0, 1),) + DEFAULT_CONSTANTS.b_table[1:])),
    ],
)
def test_negative_controls(cid, change):
    r = verify_claim(cid, with_constants(SMALL, **change))
    assert r.verdict == FAILED, r.evidence


def test_failed_dependency_blocks():
    cfg = with_constants(SMALL, singular12=(50624,) + DEFAULT_CONSTANTS.singular12[1:])
    rep = verify_all(cfg, ids=["C4", "C13"])
    v = rep.verdicts()
    assert v["C2"] == FAILED and v["C4"] == UNKNOWN
    assert rep.claims[[c.id for c in rep.claims].index("C4")].evidence == {"blocked_by": ["C2"]}
    assert v["C13"] == VERIFIED
    assert not rep.all_passed


@pytest.fixture(scope="module")
def small_report():
    return verify_all(SMALL)


def test_small_run_passes(small_report):
    assert small_report.all_passed
    assert list(small_report.verdicts()) == claim_ids()
    assert small_report.verdicts()["C14"] == ASSUMED


def test_report_json_is_exact(small_report):
    text = small_report.to_json()
    assert json.loads(text)["config"]["sweep"] == [7, 30]

    def no_floats(o):
        if isinstance(o, float):
            return False
        if isinstance(o, dict):
            return all(no_floats(v) for v in o.values())
        if isinstance(o, list):
            return all(no_floats(v) for v in o)
        return True

    assert no_floats(json.loads(text))


def test_digest_deterministic(small_report):
    again = verify_all(FamilyConfig(p_min=7, p_max=30, jobs=2))
    assert again.digest() == small_report.digest()
    other = verify_all(FamilyConfig(p_min=7, p_max=7), ids=["C7"])
    assert other.verdicts() == {"C3": VERIFIED, "C2": VERIFIED, "C7": VERIFIED}
