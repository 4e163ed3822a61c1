"""Command line front end: ``hassecubic verify|solvable|jacobian|fiber``."""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .cubicgeom import MONOMIAL_NAMES
from .family.checks import fiber_local_point
from .family.claims import REGISTRY, ConfigError, FamilyConfig, UnknownClaimId, verify_all
from .family.objects import INFINITY, build_fiber, t_denominator, u_of_t
from .jacinv import SingularCubic, SingularCurve, jacobian_weierstrass

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def parse_rational(text: str, allow_infinity: bool = False):
    s = text.strip()
    if allow_infinity and s.lower() in ("oo", "inf", "infinity"):
        return INFINITY
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not an exact rational: {text!r}") from None


def _rational_arg(text):
    try:
        return parse_rational(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_or_inf_arg(text):
    try:
        return parse_rational(text, allow_infinity=True)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _t_list(text):
    try:
        return tuple(parse_rational(s) for s in text.split(",") if s.strip())
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _verify_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--sweep", nargs=2, type=int, metavar=("P_MIN", "P_MAX"), default=(7, 100))
    p.add_argument("--t-samples", type=_t_list, default=None, help="comma separated rationals, e.g. 0,1,2,-1,1/2,3")
    p.add_argument("--precision", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", metavar="PATH", default=None)
    p.add_argument("--report", metavar="DIR", default=None, help="also write TSV tables and figures here")
    p.add_argument("--jobs", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hassecubic", description="Exact checks on the genus-one family X_t.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run registered claims")
    vsub = v.add_subparsers(dest="scope", required=True)
    _verify_flags(vsub.add_parser("all"))
    one = vsub.add_parser("claim")
    one.add_argument("claim_id")
    _verify_flags(one)

    s = sub.add_parser("solvable", help="local point on W_u at p")
    s.add_argument("--u", type=_rational_arg, required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--precision", type=int, default=8)

    j = sub.add_parser("jacobian", help="Weierstrass model of the Jacobian of X_t")
    j.add_argument("--t", type=_rational_or_inf_arg, required=True)

    f = sub.add_parser("fiber", help="coefficients of W_u")
    f.add_argument("--u", type=_rational_or_inf_arg, required=True)
    return ap


def _config(args) -> FamilyConfig:
    kw = dict(p_min=args.sweep[0], p_max=args.sweep[1], precision=args.precision, seed=args.seed, jobs=args.jobs)
    if args.t_samples is not None:
        kw["t_samples"] = args.t_samples
    return FamilyConfig(**kw)


def cmd_verify(args, out) -> int:
    from .family.report import summary_line, write_json, write_report

    cfg = _config(args)
    ids = None
    if args.scope == "claim":
        if args.claim_id not in REGISTRY:
            raise UnknownClaimId(args.claim_id)
        ids = [args.claim_id]
    report = verify_all(cfg, ids)
    for c in report.claims:
        print(f"{c.id}\t{c.verdict}\t{c.millis}ms\t{c.anchor}", file=out)
    print(summary_line(report), file=out)
    if args.json:
        write_json(report, args.json)
    if args.report:
        write_report(report, args.report)
    return EXIT_OK if report.all_passed else EXIT_FAILED


def cmd_solvable(args, out) -> int:
    if args.precision < 1:
        raise UsageError("precision must be at least 1")
    fp = fiber_local_point(args.u, args.p, args.precision)
    c = fp.certificate
    print(f"u\t{args.u}", file=out)
    print(f"p\t{args.p}", file=out)
    print(f"status\t{c.status}", file=out)
    print(f"strategy\t{c.strategy}", file=out)
    print(f"chart\t{fp.chart}", file=out)
    if fp.solvable:
        print(f"modulus\t{args.p}^{args.precision}", file=out)
        print("point\t(" + " : ".join(str(v) for v in fp.point_on_fiber) + ")", file=out)
        print(f"replay\t{fp.replay()}", file=out)
        return EXIT_OK
    return EXIT_FAILED


def cmd_jacobian(args, out) -> int:
    t = args.t
    u = u_of_t(t)
    W = jacobian_weierstrass(build_fiber(u), check=False)
    if t is not INFINITY:
        # rescale to the model with polynomial A(t), B(t): (A d^4, B d^6), d = t^12 - t^8 - 1
        d = Fraction(t_denominator()(t))
        A, B = W.A * d**4, W.B * d**6
    else:
        A, B = W.A, W.B
    print(f"t\t{t}", file=out)
    print(f"u\t{u}", file=out)
    print(f"A\t{A}", file=out)
    print(f"B\t{B}", file=out)
    disc = -16 * (4 * A**3 + 27 * B**2)
    print(f"discriminant\t{disc}", file=out)
    if disc == 0:
        print("j\tundefined (singular)", file=out)
        return EXIT_FAILED
    print(f"j\t{Fraction(1728 * 4 * A**3) / (4 * A**3 + 27 * B**2)}", file=out)
    return EXIT_OK


def cmd_fiber(args, out) -> int:
    C = build_fiber(args.u)
    names = MONOMIAL_NAMES if args.u is not INFINITY else tuple(n.replace("z", "w") for n in MONOMIAL_NAMES)
    for n, c in zip(names, C.coeffs):
        print(f"{n}\t{c}", file=out)
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "solvable": cmd_solvable, "jacobian": cmd_jacobian, "fiber": cmd_fiber}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ConfigError, UnknownClaimId, SingularCubic, SingularCurve, ValueError) as exc:
        msg = f"unknown claim id {exc.args[0]}" if isinstance(exc, UnknownClaimId) else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
