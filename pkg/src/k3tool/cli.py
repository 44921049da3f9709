"""Command-line front end. Every subcommand prints one JSON document with
sorted keys.

Exit codes: 0 success, 1 a certificate failed, 2 usage or parse error,
3 precision exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .errors import DegenerateMatch, InvolutionCheckFailed, K3ToolError, PrecisionExhausted
from .exact import BigComplex, CubicExtElement, QuadExtElement, format_rational, parse_rational
from .exact.bigcomplex import DEFAULT_PREC
from .suite import DEFAULT_SEED, run_criterion

EXIT_OK, EXIT_CERT, EXIT_USAGE, EXIT_PRECISION = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- wire formats -----------------------------------------------------------------------


def rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def complex_arg(text: str) -> str:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"complex literal must be 're,im': {text!r}")
    for p in parts:
        try:
            float(p)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a decimal number: {p!r}") from None
    return text


def encode(v):
    """JSON-ready form of exact and numeric values."""
    if isinstance(v, (bool, int, float)) or v is None:
        return v
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, QuadExtElement):
        if v.is_rational():
            return format_rational(v.base)
        return {"base": format_rational(v.base), "coeff": format_rational(v.coeff), "radicand": v.radicand}
    if isinstance(v, CubicExtElement):
        if v.is_rational():
            return format_rational(v.rational_part())
        return {
            "c0": format_rational(v.c0),
            "c1": format_rational(v.c1),
            "c2": format_rational(v.c2),
            "q_cubed": format_rational(v.modulus_constant),
        }
    if isinstance(v, BigComplex):
        return v.to_wire()
    if isinstance(v, dict):
        return {str(k): encode(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [encode(x) for x in v]
    return str(v)


def _polynomial_json(p):
    return [format_rational(Fraction(c)) for c in p.coeffs]


# -- subcommands --------------------------------------------------------------------------


def cmd_invariants(args):
    from .inose import InoseContext, j_pair, modular_invariants

    ctx = InoseContext.make(args.a, args.b)
    inv = modular_invariants(ctx)
    jp = j_pair(ctx)
    return {"pi": inv.pi, "sigma": inv.sigma, "j1": jp.j1, "j2": jp.j2}, True


def _fiber_records_json(records):
    out = []
    for r in records:
        loc = r.location
        if loc.is_infinity:
            where = {"point": "infinity"}
        else:
            where = {
                "factor": _polynomial_json(loc.factor),
                "exact": format_rational(loc.exact) if loc.exact is not None else None,
                "numeric": loc.root.to_wire(20),
            }
        out.append({"location": where, "kodaira": r.kodaira.label, "delta_order": r.delta_order})
    return out


def cmd_fibers(args):
    if args.fibration in ("theta2", "psi2"):
        from .inose import InoseContext, psi2_fiber_case, psi2_weierstrass, theta2_fiber_case, theta2_weierstrass
        from .weierstrass import euler_sum, fiber_multiset, full_fiber_table

        if args.a is None or args.b is None:
            raise UsageError(f"{args.fibration} needs --a and --b")
        ctx = InoseContext.make(args.a, args.b)
        if args.fibration == "theta2":
            fib, tag = theta2_weierstrass(ctx), theta2_fiber_case(ctx)
        else:
            fib, tag = psi2_weierstrass(ctx), psi2_fiber_case(ctx)
        table = full_fiber_table(fib, args.prec)
        euler = euler_sum(table)
        return {
            "fibration": args.fibration,
            "a": args.a,
            "b": args.b,
            "case": tag,
            "fibers": _fiber_records_json(table),
            "multiset": fiber_multiset(table),
            "euler": euler,
        }, euler == 24
    from .kummer import LegendrePair, upsilon2_data, upsilon2_euler_sum, upsilon2_fiber_cases

    if args.alpha is None or args.beta is None:
        raise UsageError("upsilon2 needs --alpha and --beta")
    pair = LegendrePair(args.alpha, args.beta)
    case = upsilon2_fiber_cases(pair)
    ctx = upsilon2_data(pair)
    multiset = dict(case.fibers)
    multiset["I*6"] = 1
    euler = upsilon2_euler_sum(case)
    return {
        "fibration": "upsilon2",
        "alpha": args.alpha,
        "beta": args.beta,
        "case": case.tag,
        "j1": case.j1,
        "j2": case.j2,
        "locations": [{"mu": v, "multiplicity": m} for v, m in ctx.sigma_upsilon],
        "multiset": multiset,
        "euler": euler,
        "consistent": case.consistent,
    }, euler == 24 and case.consistent


def cmd_match(args):
    from .kummer import LegendrePair, legendre_j
    from .matching import build_match, invariants_consistency, verify_case_identity, verify_functional_match

    pair = LegendrePair(args.alpha, args.beta)
    warnings = []
    try:
        m = build_match(pair, args.case)
    except DegenerateMatch as exc:
        return {"alpha": args.alpha, "beta": args.beta, "error": exc.code, "message": str(exc)}, False
    if m.degenerate:
        warnings.append({"code": "DegenerateMatch", "message": "D has repeated roots; multiplicity-aware path used"})
    j1, j2 = legendre_j(pair.alpha), legendre_j(pair.beta)
    certs = {"case_identity": verify_case_identity(m, pair).ok}
    inv = invariants_consistency(pair, args.case)
    certs["invariants"] = inv.ok
    if args.verify_all or m.rational:
        certs["functional_match"] = verify_functional_match(m, pair)
    if m.degenerate:
        certs["multiplicities"] = bool(m.certificate.get("consistent"))
    out = {
        "alpha": args.alpha,
        "beta": args.beta,
        "case": m.case,
        "p": m.p,
        "q_cubed": m.q_cubed,
        "q": m.q,
        "a": m.a,
        "a_repr": m.a,
        "a_cubed": m.a_cubed,
        "b": m.b,
        "sigma": j1 + j2,
        "pi": j1 * j2,
        "degenerate": m.degenerate,
        "certificates": certs,
        "warnings": warnings,
    }
    if m.degenerate:
        out["multiplicities"] = {k: v for k, v in m.certificate.items() if k != "consistent"}
    return out, all(certs.values())


def cmd_lattice(args):
    from .lattice import discriminant_form, named_lattice, roots

    lat = named_lattice(args.name)
    out = {"name": lat.name, "rank": lat.rank}
    if args.show == "gram":
        out["gram"] = lat.matrix()
        out["det"] = lat.det()
    elif args.show == "disc":
        out.update(discriminant_form(lat).to_json())
        out["det"] = lat.det()
    else:
        rs = roots(lat)
        out["count"] = len(rs)
        if args.list:
            out["roots"] = [list(r) for r in rs]
    return out, True


def cmd_modj(args):
    from .modular import modular_J

    tau = BigComplex.parse(args.tau, args.prec + 64)
    j = modular_J(tau, args.prec)
    return {"tau": args.tau, "precision_bits": args.prec, "J": j}, True


def cmd_periods(args):
    from .modular import PeriodPoint, period_vector_checks, sigma_pi_from_periods

    pt = PeriodPoint(BigComplex.parse(args.tau, args.prec + 64), BigComplex.parse(args.u, args.prec + 64))
    sigma, pi = sigma_pi_from_periods(pt, args.prec)
    cert = period_vector_checks(pt)
    return {
        "tau": args.tau,
        "u": args.u,
        "precision_bits": args.prec,
        "sigma": sigma,
        "pi": pi,
        "omega_omega_zero": cert.omega_omega_symbolic_zero,
        "omega_omegabar": cert.omega_omegabar,
    }, cert.ok


def cmd_verify_suite(args):
    numbers = [int(x) for x in args.criteria.split(",")] if args.criteria else list(range(1, 9))
    if any(n < 1 or n > 8 for n in numbers):
        raise UsageError("criteria are numbered 1..8")
    results = [run_criterion(n, args.seed) for n in numbers]
    for r in results:
        print(r.line(), file=sys.stderr)
    return {
        "seed": args.seed,
        "criteria": [r.to_json() for r in results],
        "passed": all(r.passed for r in results),
    }, all(r.passed for r in results)


# -- parser ---------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="k3tool", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="pi, sigma and the j-pair of X(a, b)")
    p.add_argument("--a", type=rational_arg, required=True)
    p.add_argument("--b", type=rational_arg, required=True)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("fibers", help="singular fibers of theta2, psi2 or upsilon2")
    p.add_argument("fibration", choices=("theta2", "psi2", "upsilon2"))
    p.add_argument("--a", type=rational_arg)
    p.add_argument("--b", type=rational_arg)
    p.add_argument("--alpha", type=rational_arg)
    p.add_argument("--beta", type=rational_arg)
    p.add_argument("--prec", type=int, default=DEFAULT_PREC)
    p.set_defaults(func=cmd_fibers)

    p = sub.add_parser("match", help="affine match between psi2 and upsilon2")
    p.add_argument("--alpha", type=rational_arg, required=True)
    p.add_argument("--beta", type=rational_arg, required=True)
    p.add_argument("--case", choices=("A", "B"), default="A")
    p.add_argument("--verify-all", action="store_true")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("lattice", help="named lattices")
    p.add_argument("--name", required=True)
    p.add_argument("--show", choices=("gram", "disc", "roots"), default="gram")
    p.add_argument("--list", action="store_true", help="with --show roots, print the vectors")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("modj", help="the modular function J")
    p.add_argument("--tau", type=complex_arg, required=True)
    p.add_argument("--prec", type=int, default=DEFAULT_PREC)
    p.set_defaults(func=cmd_modj)

    p = sub.add_parser("periods", help="sigma, pi from a period point")
    p.add_argument("--tau", type=complex_arg, required=True)
    p.add_argument("--u", type=complex_arg, required=True)
    p.add_argument("--prec", type=int, default=DEFAULT_PREC)
    p.set_defaults(func=cmd_periods)

    p = sub.add_parser("verify-suite", help="run the acceptance battery")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--criteria", default="")
    p.set_defaults(func=cmd_verify_suite)
    return parser


def _text(doc, indent=""):
    lines = []
    for k in sorted(doc):
        v = doc[k]
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.extend(_text(v, indent + "  "))
        else:
            lines.append(f"{indent}{k}: {json.dumps(v, sort_keys=True) if isinstance(v, list) else v}")
    return lines


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "seed", 0) is None:
        args.seed = DEFAULT_SEED
    try:
        doc, ok = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KeyError as exc:
        print(json.dumps({"error": "UnknownName", "message": str(exc).strip("'\"")}, sort_keys=True))
        return EXIT_USAGE
    except InvolutionCheckFailed as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}, sort_keys=True))
        return EXIT_CERT
    except PrecisionExhausted as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}, sort_keys=True))
        return EXIT_PRECISION
    except K3ToolError as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}, sort_keys=True))
        return EXIT_USAGE
    doc = encode(doc)
    if args.format == "text":
        print("\n".join(_text(doc)))
    else:
        print(json.dumps(doc, sort_keys=True))
    return EXIT_OK if ok else EXIT_CERT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
