"""Registry of the fourteen verifiable claims about the family and their procedures.

Every procedure returns a verdict and a JSON-ready evidence payload in which
exact numbers are strings.  A claim whose dependency did not verify is
reported as Unknown without running.
"""
from __future__ import annotations

import hashlib
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import reduce
from typing import Callable

from .. import __version__
from ..cubicgeom import DegenerationType, PlaneCubic, find_smooth_Fp_point, real_solvability, splits_into_lines
from ..cubicgeom.singular import singular_locus
from ..exactnum import factor_over_basis, primes_between
from ..galoisfield import build_extension, roots_in_field
from ..jacinv import WeierstrassCurve, invariant_discriminant, jacobian_weierstrass
from ..polyring import certify_irreducible, is_irreducible_over_Q
from ..polyring.elimination import _to_univariate, eliminate_singular_locus_detailed
from ..polyring.multipoly import MultiPoly
from ..polyring.resultant import resultant as mp_resultant
from ..polyring.unipoly import discriminant, gcd_and_squarefree_part, poly_gcd
from .checks import RESIDUE_PRIMES, fiber_local_point, verify_residue_conditions, verify_structural_u_map
from .objects import (
    _CUBE_OF_SUM,
    _DIAGONAL,
    DEFAULT_CONSTANTS,
    INFINITY,
    A_of_t,
    B_of_t,
    FamilyConstants,
    binary_cubic,
    build_fiber,
    dehomogenized_fiber,
    tfiber_model,
    u_of_t,
)

VERIFIED = "Verified"
FAILED = "Failed"
UNKNOWN = "Unknown"
ASSUMED = "AssumedExternal"
VERDICTS = (VERIFIED, FAILED, UNKNOWN, ASSUMED)

DEFAULT_T_SAMPLES = (Fraction(0), Fraction(1), Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(3))


class UnknownClaimId(KeyError):
    pass


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyConfig:
    p_min: int = 7
    p_max: int = 100
    t_samples: tuple = DEFAULT_T_SAMPLES
    precision: int = 8
    seed: int = 0
    jobs: int = 1
    constants: FamilyConstants = field(default=DEFAULT_CONSTANTS, compare=False)

    def __post_init__(self):
        if self.p_min < 2 or self.p_max < self.p_min:
            raise ConfigError(f"bad sweep range [{self.p_min}, {self.p_max}]")
        if self.precision < 1:
            raise ConfigError("precision must be at least 1")
        if self.jobs < 1:
            raise ConfigError("jobs must be at least 1")
        if not self.t_samples:
            raise ConfigError("at least one t sample is required")
        object.__setattr__(self, "t_samples", tuple(Fraction(t) for t in self.t_samples))

    @property
    def sweep(self) -> tuple[int, ...]:
        return tuple(p for p in primes_between(self.p_min, self.p_max) if p not in self.constants.bad_primes)

    def as_dict(self) -> dict:
        return {
            "sweep": [self.p_min, self.p_max],
            "sweep_primes": len(self.sweep),
            "t_samples": [str(t) for t in self.t_samples],
            "precision": self.precision,
            "seed": self.seed,
            "jobs": self.jobs,
        }


@dataclass(frozen=True)
class ClaimRecord:
    id: str
    description: str
    anchor: str
    procedure: Callable
    dependencies: tuple[str, ...] = ()


@dataclass(frozen=True)
class ClaimResult:
    id: str
    anchor: str
    verdict: str
    evidence: dict
    millis: int

    def as_dict(self) -> dict:
        return {"id": self.id, "anchor": self.anchor, "verdict": self.verdict, "evidence": self.evidence, "millis": self.millis}


def _pmap(fn, items, jobs: int):
    """Order-preserving map, in worker processes when jobs > 1."""
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items))


def _fact_str(pairs) -> str:
    return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in pairs)


# -- C1 ------------------------------------------------------------------------

def _c1(cfg: FamilyConfig, deps):
    k = cfg.constants
    d = discriminant(binary_cubic())
    basis = [p for p, _ in k.c1_factorization]
    fac = factor_over_basis(d, basis)
    got = tuple((p, fac.exponent(p)) for p in basis)
    ok = d == k.c1_discriminant and fac.sign == 1 and got == tuple(k.c1_factorization) and fac.value() == d
    return ok, {
        "binary_cubic": "5x^3 + 9y^3 - 10(x+y)^3",
        "discriminant": str(d),
        "factorization": str(fac),
        "expected": str(k.c1_discriminant),
    }


# -- C2 ------------------------------------------------------------------------

def _no_singular_points_at_infinity() -> dict:
    """On z = 0: the partials have no common zero (x : 1 : 0) or (1 : 0 : 0) for any u."""
    x, y, z, u = MultiPoly.gens(("x", "y", "z", "u"))
    F = 5 * x**3 + 9 * y**3 + 10 * z**3 + 12 * u**3 * (x + y + z) ** 3
    partials = [F.diff(v) for v in "xyz"]
    chart = [P.subs({"y": 1, "z": 0}).drop_to(("x", "u")) for P in partials]
    res = []
    for i in range(3):
        for j in range(i + 1, 3):
            r = mp_resultant(chart[i], chart[j], "x")
            if r.terms:
                res.append(_to_univariate(r, "u"))
    g1 = reduce(poly_gcd, res[1:], res[0].monic())
    corner = [_to_univariate(P.subs({"x": 1, "y": 0, "z": 0}).drop_to(("u",)), "u") for P in partials]
    g2 = reduce(poly_gcd, corner[1:], corner[0].monic())
    return {"chart_x_1_0_gcd_degree": g1.degree(), "point_1_0_0_gcd_degree": g2.degree(),
            "ok": g1.degree() == 0 and g2.degree() == 0}


def _c2(cfg: FamilyConfig, deps):
    res = eliminate_singular_locus_detailed(dehomogenized_fiber(), rng=random.Random(cfg.seed))
    target = cfg.constants.singular12_poly()
    got = res.polynomial
    ok_affine = got == target or got == -target
    inf = _no_singular_points_at_infinity()
    return ok_affine and inf["ok"], {
        "resultant_degrees": list(res.resultant_degrees),
        "eliminant": [str(c) for c in got.coeffs],
        "expected": [str(c) for c in target.coeffs],
        "rejected_extraneous_factors": [[str(c) for c in q.coeffs] for q in res.rejected],
        "line_at_infinity": inf,
    }


# -- C3 ------------------------------------------------------------------------

def _c3(cfg: FamilyConfig, deps):
    k = cfg.constants
    d = discriminant(k.singular12_poly())
    basis = [p for p, _ in k.singular12_disc_factorization]
    try:
        fac = factor_over_basis(d, basis)
    except ValueError as exc:
        return False, {"discriminant_bits": abs(d).bit_length(), "error": str(exc)}
    got = tuple((p, fac.exponent(p)) for p in basis)
    ok = fac.sign == 1 and got == tuple(k.singular12_disc_factorization)
    ok &= set(basis) == set(k.bad_primes)
    return ok, {"factorization": str(fac), "expected": _fact_str(k.singular12_disc_factorization),
                "support_is_bad_primes": set(basis) == set(k.bad_primes)}


# -- C4 ------------------------------------------------------------------------

def _c4(cfg: FamilyConfig, deps):
    f = cfg.constants.singular12_poly()
    rng = random.Random(cfg.seed)
    search = is_irreducible_over_Q(f, 200, rng)
    ev = {"witness_search_bound": 200}
    if search:
        ev["witness_prime"] = search.prime
        ev["working_prime"] = search.prime
        return True, ev
    shapes = sorted({pat for _, pat in search.patterns})
    ev["witness_prime"] = None
    ev["reduction_patterns"] = ["(" + ",".join(map(str, s)) + ")" for s in shapes]
    cert = certify_irreducible(f, rng)
    if cert is None:
        ev["certificate"] = None
        return False, ev
    ev["certificate"] = cert.as_dict()
    ev["certificate_replays"] = cert.replay()
    ev["working_prime"] = cert.prime
    return ev["certificate_replays"], ev


# -- C5 ------------------------------------------------------------------------

def _c5_fiber(args):
    ub, p = args
    C = build_fiber(ub).reduce(p)
    P = find_smooth_Fp_point(C)
    return splits_into_lines(C), P


def _c5(cfg: FamilyConfig, deps):
    p = max(cfg.constants.bad_primes)
    out = _pmap(_c5_fiber, [(ub, p) for ub in range(p)], cfg.jobs)
    split = [ub for ub, (s, _) in enumerate(out) if s]
    missing = [ub for ub, (_, P) in enumerate(out) if P is None]
    return not split and not missing, {
        "prime": p,
        "residues_checked": len(out),
        "splitting_residues": [str(u) for u in split],
        "residues_without_smooth_point": [str(u) for u in missing],
        "smooth_point_at_0": [str(c) for c in out[0][1].coords] if out[0][1] else None,
    }


# -- C6 ------------------------------------------------------------------------

EXPECTED_STRATEGY = {2: "rational-line", 3: "residue-search", 5: "rational-line"}


def _c6(cfg: FamilyConfig, deps):
    N = cfg.precision
    values = [Fraction(1)] + [u_of_t(t) for t in cfg.t_samples]
    seen, rows, ok = set(), [], True
    for u in values:
        if u in seen:
            continue
        seen.add(u)
        for p in RESIDUE_PRIMES:
            fp = fiber_local_point(u, p, N)
            c = fp.certificate
            good = fp.solvable and fp.replay() and fp.chart == "first" and c.strategy == EXPECTED_STRATEGY[p]
            if p == 3 and good:
                good = c.point[1] % 9 == 2 and c.point[2] % 9 == 1
            ok &= good
            rows.append({"u": str(u), "prime": p, "ok": good, "strategy": c.strategy,
                         "point": None if c.point is None else [str(v) for v in c.point],
                         "line": None if c.line is None else list(c.line)})
    return ok, {"precision": N, "certificates": rows}


# -- C7 ------------------------------------------------------------------------

def _c7_prime(args):
    p, coeffs, disc_primes = args
    from ..polyring.unipoly import UniPoly

    f = UniPoly(coeffs, "u").reduce(p)
    g, _ = gcd_and_squarefree_part(f)
    squarefree = g.degree() == 0 and f.degree() == len(coeffs) - 1
    pts, complete = singular_locus(build_fiber(0).reduce(p))
    smooth0 = not pts and complete
    explained = p in disc_primes
    return {"prime": p, "squarefree": squarefree, "explained_by_discriminant": (not squarefree) and explained,
            "u0_fiber_smooth": smooth0, "ok": (squarefree or explained) and smooth0}


def _c7(cfg: FamilyConfig, deps):
    k = cfg.constants
    disc_primes = tuple(p for p, _ in k.singular12_disc_factorization)
    rows = _pmap(_c7_prime, [(p, k.singular12, disc_primes) for p in cfg.sweep], cfg.jobs)
    exceptions = [r["prime"] for r in rows if not r["squarefree"]]
    return all(r["ok"] for r in rows), {"primes": [r["prime"] for r in rows], "non_squarefree_primes": exceptions,
                                         "failures": [r for r in rows if not r["ok"]]}


# -- C8 ------------------------------------------------------------------------

def _fiber_over(ubar, K) -> PlaneCubic:
    c = ubar**3 * 12
    return PlaneCubic([K(d) + c * m for d, m in zip(_DIAGONAL, _CUBE_OF_SUM)])


def _c8(cfg: FamilyConfig, deps):
    p = deps["C4"].evidence.get("working_prime")
    if p is None:
        return None, {"reason": "no working prime from C4"}
    rng = random.Random(cfg.seed)
    f = cfg.constants.singular12_poly()
    K = build_extension(p, f.degree())
    roots = roots_in_field(f, K, rng)
    distinct = len({r for r, _ in roots}) == f.degree() == len(roots) and all(m == 1 for _, m in roots)
    fibers = []
    for r, _ in roots:
        C = _fiber_over(r, K)
        pts, complete = singular_locus(C, rng=rng)
        fibers.append({
            "root_index": str(r.index()),
            "singular_points": len(pts),
            "ranks": [s.rank for s in pts],
            "complete": complete,
            "invariant_discriminant_zero": not invariant_discriminant(C),
        })
    nodal = all(fb["singular_points"] == 1 and fb["ranks"] == [2] and fb["complete"] for fb in fibers)
    # the fiber over u = oo lives in the pencil's other chart
    W_inf = build_fiber(INFINITY)
    inf_disc = invariant_discriminant(W_inf)
    inf_pts, inf_complete = singular_locus(W_inf.reduce(p), rng=rng)
    inf_ok = inf_disc != 0 and not inf_pts and inf_complete
    ok = distinct and nodal and inf_ok
    return ok, {
        "prime": p,
        "field_degree": K.k,
        "distinct_roots": len({r for r, _ in roots}),
        "fibers": fibers,
        "node_euler_characteristic": DegenerationType.of("nodal").euler_characteristic,
        "u_infinity_fiber": {"cubic": "5x^3 + 9y^3 - 10(x+y)^3 + 12w^3",
                              "invariant_discriminant": str(inf_disc),
                              "smooth_mod_prime": not inf_pts and inf_complete},
    }


# -- C9, C10 -------------------------------------------------------------------

def _c9(cfg: FamilyConfig, deps):
    r = verify_structural_u_map()
    return r.ok, r.as_dict()


def _c10(cfg: FamilyConfig, deps):
    reps = [verify_residue_conditions(t) for t in cfg.t_samples]
    return all(r.ok for r in reps), {"samples": [r.as_dict() for r in reps]}


# -- C11 -----------------------------------------------------------------------

def _c11_task(args):
    u, p, N = args
    fp = fiber_local_point(u, p, N)
    ok = fp.solvable and fp.replay()
    return {"prime": p, "ok": ok, "status": fp.certificate.status, "strategy": fp.certificate.strategy,
            "chart": fp.chart,
            "point": None if fp.point_on_fiber is None else [str(c) for c in fp.point_on_fiber]}


def _c11(cfg: FamilyConfig, deps):
    primes = sorted(set(cfg.constants.bad_primes) | set(RESIDUE_PRIMES) | set(cfg.sweep))
    N = cfg.precision
    tasks, samples = [], []
    for t in cfg.t_samples:
        u = u_of_t(t)
        samples.append((t, u))
        if u is not INFINITY:
            tasks += [(u, p, N) for p in primes]
    results = iter(_pmap(_c11_task, tasks, cfg.jobs))
    verdict, out = True, []
    unknown = False
    for t, u in samples:
        if u is INFINITY:
            verdict = False
            out.append({"t": str(t), "u": "oo", "ok": False})
            continue
        rows = [next(results) for _ in primes]
        real = real_solvability(build_fiber(u))
        ok = all(r["ok"] for r in rows) and bool(real)
        unknown |= any(r["status"] != "Solvable" for r in rows)
        verdict &= ok
        out.append({
            "t": str(t), "u": str(u), "ok": ok,
            "primes_checked": len(rows),
            "second_chart_primes": [r["prime"] for r in rows if r["chart"] == "second"],
            "strategies": {s: sum(r["strategy"] == s for r in rows) for s in sorted({r["strategy"] for r in rows})},
            "bad_prime_points": {str(r["prime"]): r["point"] for r in rows if r["prime"] in cfg.constants.bad_primes},
            "failed_primes": [r["prime"] for r in rows if not r["ok"]],
            "real": {"solvable": bool(real), "reason": real.reason},
        })
    if not verdict and unknown:
        return None, {"precision": N, "samples": out}
    return verdict, {"precision": N, "samples": out}


# -- C12, C13, C14 ---------------------------------------------------------------

def _c12(cfg: FamilyConfig, deps):
    G, d = tfiber_model()
    W = jacobian_weierstrass(G, check=False).rescale(d * d)
    A, B = A_of_t(cfg.constants), B_of_t(cfg.constants)
    okA, okB = W.A == A, W.B == B
    return okA and okB, {
        "model": "Jacobian of d^3 X_t rescaled by d^2, d = t^12 - t^8 - 1",
        "A_matches": okA,
        "B_matches": okB,
        "B_degree": W.B.degree(),
        "B_terms_compared": len(cfg.constants.b_table),
    }


def _c13(cfg: FamilyConfig, deps):
    A, B = A_of_t(cfg.constants), B_of_t(cfg.constants)
    j = {}
    for t in (0, 2):
        W = WeierstrassCurve(A(Fraction(t)), B(Fraction(t)))
        j[t] = Fraction(W.j())
    return j[0] != j[2], {"j_t0": str(j[0]), "j_t2": str(j[2])}


def _c14(cfg: FamilyConfig, deps):
    return ASSUMED, {
        "statement": "X_t has no rational point",
        "assumption": "the cubic surface 5x^3 + 9y^3 + 10z^3 + 12w^3 = 0 has no rational point",
        "checked_here": "no; this is an external input, only the local side (C11) is computed",
    }


REGISTRY: dict[str, ClaimRecord] = {r.id: r for r in (
    ClaimRecord("C1", "discriminant of the binary cubic cut out by the line is 3^3*5^2*359",
                "discriminant of 5x^3 + 9y^3 - 10(x+y)^3", _c1),
    ClaimRecord("C2", "the singular fibers of the pencil lie over the roots of the degree-12 polynomial",
                "eliminant of (h, h_x, h_y) for h = W_u(x, y, 1)", _c2),
    ClaimRecord("C3", "discriminant of the degree-12 polynomial is 2^146 3^92 5^50 359^4",
                "discriminant of the singular-value polynomial", _c3, ("C2",)),
    ClaimRecord("C4", "the degree-12 polynomial is irreducible over Q",
                "irreducibility of the singular-value polynomial", _c4, ("C2",)),
    ClaimRecord("C5", "for every u in F_359 the fiber does not split into lines and has a smooth point",
                "fibers over F_359", _c5),
    ClaimRecord("C6", "fibers with u = 1 mod 2, 3, 5 have 2-, 3- and 5-adic points",
                "local points at the primes 2, 3, 5", _c6, ("C10",)),
    ClaimRecord("C7", "good reduction data over the prime sweep",
                "squarefreeness of the singular-value polynomial mod p; smooth fiber at u = 0", _c7, ("C3",)),
    ClaimRecord("C8", "twelve distinct singular values, each fiber a nodal cubic; u = oo fiber smooth",
                "nodal singular fibers", _c8, ("C4", "C7")),
    ClaimRecord("C9", "u(t) is 1 on P^1(F_p) for p = 2, 3, 5 and finite on P^1(F_359)",
                "residue structure of u(t) = (t^12 - t^4 - 1)/(t^12 - t^8 - 1)", _c9),
    ClaimRecord("C10", "u(t) = 1 mod p for p = 2, 3, 5 and is 359-integral for each sampled t",
                "residue conditions on sampled t", _c10),
    ClaimRecord("C11", "X_t has Q_p-points at every checked prime and real points, for each sampled t",
                "local solvability of X_t", _c11, ("C5", "C6", "C7", "C8", "C9", "C10")),
    ClaimRecord("C12", "Jacobian of X_t is y^2 = x^3 + A(t) x + B(t) with the tabulated A, B",
                "Weierstrass model of the Jacobian", _c12),
    ClaimRecord("C13", "the j-invariant of the Jacobian is not constant in t",
                "j(E_0) != j(E_2)", _c13, ("C12",)),
    ClaimRecord("C14", "X_t has no rational point",
                "global insolvability (external input)", _c14, ("C11",)),
)}


def claim_ids() -> list[str]:
    return sorted(REGISTRY, key=lambda c: int(c[1:]))


def _run(cid: str, cfg: FamilyConfig, done: dict[str, ClaimResult]) -> ClaimResult:
    if cid in done:
        return done[cid]
    rec = REGISTRY[cid]
    deps = {d: _run(d, cfg, done) for d in rec.dependencies}
    blocked = [d for d, r in deps.items() if r.verdict not in (VERIFIED, ASSUMED)]
    start = time.perf_counter()
    if blocked:
        verdict, evidence = UNKNOWN, {"blocked_by": blocked}
    else:
        try:
            ok, evidence = rec.procedure(cfg, deps)
        except Exception as exc:  # a crash is not a disproof
            ok, evidence = None, {"error": f"{type(exc).__name__}: {exc}"}
        verdict = ok if isinstance(ok, str) else {True: VERIFIED, False: FAILED, None: UNKNOWN}[ok]
    millis = int((time.perf_counter() - start) * 1000)
    res = ClaimResult(cid, rec.anchor, verdict, evidence, millis)
    done[cid] = res
    return res


def verify_claim(cid: str, config: FamilyConfig | None = None) -> ClaimResult:
    """Run one claim, dependencies first."""
    if cid not in REGISTRY:
        raise UnknownClaimId(cid)
    return _run(cid, config or FamilyConfig(), {})


@dataclass(frozen=True)
class CertificateReport:
    config: FamilyConfig
    claims: tuple[ClaimResult, ...]
    version: str = __version__

    def as_dict(self) -> dict:
        return {"version": self.version, "config": self.config.as_dict(), "claims": [c.as_dict() for c in self.claims]}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    def digest(self) -> str:
        """sha256 of the report with timing fields and the worker count removed."""
        d = self.as_dict()
        del d["config"]["jobs"]
        for c in d["claims"]:
            del c["millis"]
        return hashlib.sha256(json.dumps(d, sort_keys=True, separators=(",", ":")).encode()).hexdigest()

    def verdicts(self) -> dict[str, str]:
        return {c.id: c.verdict for c in self.claims}

    @property
    def all_passed(self) -> bool:
        return all(c.verdict in (VERIFIED, ASSUMED) for c in self.claims)


def verify_all(config: FamilyConfig | None = None, ids=None) -> CertificateReport:
    cfg = config or FamilyConfig()
    done: dict[str, ClaimResult] = {}
    wanted = claim_ids() if ids is None else list(ids)
    for cid in wanted:
        if cid not in REGISTRY:
            raise UnknownClaimId(cid)
        _run(cid, cfg, done)
    order = [c for c in claim_ids() if c in done]
    return CertificateReport(cfg, tuple(done[c] for c in order))


def with_constants(config: FamilyConfig, **changes) -> FamilyConfig:
    """The same configuration with some registered constants replaced (negative controls)."""
    return replace(config, constants=replace(config.constants, **changes))
