"""Command-line front end.

Exit codes: 0 success / verified, 1 verification failed, 2 usage or input
error, 3 degenerate parameter.  Every number in the JSON output is a string.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from genus2ap import ecrank, families
from genus2ap.conics import parametrize_conic, parametrize_diagonal_quadric
from genus2ap.decompose import LeadingCoeffNotSquare, NotASquareScale, OddDegree, complete_square, scaled_remainder
from genus2ap.exactmath import (
    DenominatorVanishes,
    bivar_to_json,
    format_rational,
    parse_rational,
    poly_from_json,
    poly_to_json,
    rf_to_json,
)
from genus2ap.search import SearchSpec, run_search

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3

FAMILIES = ("deg5-q1", "deg5-q2", "remark1", "deg6-h", "ga", "sixteen")


class UsageError(Exception):
    pass


def _emit(payload) -> None:
    json.dump(payload, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _load_json(text_or_path: str):
    try:
        if text_or_path.lstrip().startswith(("[", "{")):
            return json.loads(text_or_path)
        with open(text_or_path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {text_or_path!r}: {exc}") from exc


def _poly_arg(text: str):
    try:
        return poly_from_json(_load_json(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# --------------------------------------------------------------------------
# commands


def cmd_verify(args) -> int:
    try:
        with open(args.certificate) as fh:
            cert = families.APCertificate.from_json(fh.read())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot load certificate: {exc}") from exc
    verdict = families.verify_certificate(cert, genus2=not args.any_degree)
    _emit(verdict.to_dict())
    return EXIT_OK if verdict.valid else EXIT_FAILED


def cmd_family(args) -> int:
    name = args.name
    t = _rational(args.t) if args.t is not None else None
    A = _rational(args.A) if args.A is not None else None
    if name in ("ga", "sixteen"):
        if A is None:
            raise UsageError(f"family {name} needs --A")
        build = families.g_A if name == "ga" else ecrank.sixteen_point_curve
        if name == "ga":
            poly, cert = build(A)
        else:
            cert = build(A)
            poly = cert.poly
        _emit({"family": name, "A": format_rational(A), "poly": poly_to_json(poly), "certificate": cert.to_dict()})
        return EXIT_OK

    if t is None:
        symbolic = {
            "deg5-q1": lambda: families.degree5_family_symbolic("Q1"),
            "deg5-q2": lambda: families.degree5_family_symbolic("Q2"),
            "remark1": families.remark1_family,
            "deg6-h": families.degree6_H_symbolic,
        }[name]()
        _emit({"family": name, "poly_over_Qt": bivar_to_json(symbolic)})
        return EXIT_OK

    if name in ("deg5-q1", "deg5-q2"):
        poly, cert = families.degree5_family(name[-2:].upper(), t)
    elif name == "remark1":
        poly, cert = families.remark1_family_at(t)
    else:
        poly, cert = families.degree6_H(t)
    _emit({"family": name, "t": format_rational(t), "poly": poly_to_json(poly), "certificate": cert.to_dict()})
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        spec = SearchSpec.from_dict(_load_json(args.spec))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad search spec: {exc}") from exc
    run = run_search(spec, workers=args.workers, output=args.output, checkpoint=args.checkpoint)
    _emit({"strategy": spec.strategy, "chunks": run.chunks_total, "results": run.results})
    return EXIT_OK


def _curve(args) -> ecrank.WeierstrassCurve:
    if args.curve is None:
        return ecrank.paper_curve()
    parts = args.curve.split(",")
    if len(parts) != 5:
        raise UsageError("--curve takes a1,a2,a3,a4,a6")
    try:
        return ecrank.WeierstrassCurve(*(_rational(p) for p in parts))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _point(text: str) -> ecrank.ECPoint:
    if text.strip().upper() in ("O", "INF", "INFINITY"):
        return ecrank.INFINITY
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"point must be 'x,y' or 'O', got {text!r}")
    return ecrank.ECPoint(_rational(parts[0]), _rational(parts[1]))


def _point_json(P: ecrank.ECPoint):
    if P.is_infinity:
        return "O"
    return [format_rational(P.x), format_rational(P.y)]


def cmd_ec(args) -> int:
    E = _curve(args)
    try:
        if args.ec_command == "check-point":
            P = _point(args.point)
            _emit({"point": _point_json(P), "on_curve": E.contains(P)})
            return EXIT_OK if E.contains(P) else EXIT_FAILED
        if args.ec_command == "add":
            R = ecrank.ec_add(E, _point(args.P), _point(args.Q))
            _emit({"sum": _point_json(R)})
            return EXIT_OK
        if args.ec_command == "mul":
            R = ecrank.ec_mul(E, args.n, _point(args.P))
            _emit({"product": _point_json(R)})
            return EXIT_OK
    except ecrank.PointNotOnCurve as exc:
        raise UsageError(str(exc)) from exc
    # gen-a
    m = ecrank.b0_quartic()
    model = ecrank.quartic_to_weierstrass(m)
    seeds = ecrank.seeds_on_model(model[0])
    try:
        values = ecrank.generate_A_values(m, seeds, args.count, max_norm=args.max_norm, model=model)
    except ecrank.ExhaustedCombinations as exc:
        raise UsageError(f"{exc}; raise --max-norm") from exc
    _emit({"A": [format_rational(a) for a in values]})
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = _poly_arg(args.poly)
    try:
        d = complete_square(g)
        out = {"h": poly_to_json(d.h), "r": poly_to_json(d.r)}
        if args.scale is not None:
            out["f"] = poly_to_json(scaled_remainder(g, _rational(args.scale)))
    except (OddDegree, LeadingCoeffNotSquare, NotASquareScale) as exc:
        raise UsageError(str(exc)) from exc
    _emit(out)
    return EXIT_OK


def cmd_parametrize(args) -> int:
    if args.kind == "conic":
        q = _poly_arg(args.q)
        parts = args.base.split(",")
        if len(parts) != 2:
            raise UsageError("--base takes u0,p0")
        try:
            param = parametrize_conic(q, tuple(_rational(p) for p in parts))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        _emit({"u": rf_to_json(param.u_of_t), "p": rf_to_json(param.p_of_t)})
        return EXIT_OK
    coeffs = [_rational(c) for c in args.coeffs.split(",")]
    base = [_rational(c) for c in args.base.split(",")] if args.base else [1] * 5
    try:
        quad = parametrize_diagonal_quadric(coeffs, base)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    forms = []
    for f in quad.forms:
        forms.append({"".join(map(str, e)): format_rational(c) for e, c in sorted(f.terms.items(), reverse=True)})
    _emit({"variables": ["a", "b", "c", "d"], "forms": forms})
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genus2ap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check an AP certificate file")
    p.add_argument("certificate")
    p.add_argument("--any-degree", action="store_true", help="skip the 5 <= deg <= 6 check")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="build a curve family member and its certificate")
    p.add_argument("name", choices=FAMILIES)
    p.add_argument("--t", help="family parameter (deg5-q1, deg5-q2, remark1, deg6-h)")
    p.add_argument("--A", help="parameter for ga and sixteen")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("search", help="run a search described by a JSON spec")
    p.add_argument("spec", help="path to the spec file, or inline JSON")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", help="append results here as JSON lines")
    p.add_argument("--checkpoint", help="resume file recording completed chunks")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("ec", help="group law on a Weierstrass curve (default: the rank-4 curve E)")
    p.add_argument("--curve", help="a1,a2,a3,a4,a6")
    ec_sub = p.add_subparsers(dest="ec_command", required=True)
    q = ec_sub.add_parser("check-point")
    q.add_argument("point", help="x,y")
    q = ec_sub.add_parser("add")
    q.add_argument("P")
    q.add_argument("Q")
    q = ec_sub.add_parser("mul")
    q.add_argument("n", type=int)
    q.add_argument("P")
    q = ec_sub.add_parser("gen-a", help="A values with b0(A) a square")
    q.add_argument("--count", type=int, default=10)
    q.add_argument("--max-norm", type=int, default=4)
    p.set_defaults(func=cmd_ec)

    p = sub.add_parser("decompose", help="square completion g = h^2 - r")
    p.add_argument("poly", help="JSON coefficient array (low degree first) or a file holding one")
    p.add_argument("--scale", help="also print f = r/scale")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("parametrize", help="parametrize a conic p^2 = q(u) or a diagonal quadric")
    p.add_argument("kind", choices=("conic", "quadric"))
    p.add_argument("--q", help="conic: JSON coefficients of q(u)")
    p.add_argument("--base", help="conic: u0,p0; quadric: point e (default 1,1,1,1,1)")
    p.add_argument("--coeffs", help="quadric: a_p,a_q,a_r,a_s,a_u")
    p.set_defaults(func=cmd_parametrize)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "parametrize":
        if args.kind == "conic" and (args.q is None or args.base is None):
            parser.error("parametrize conic needs --q and --base")
        if args.kind == "quadric" and args.coeffs is None:
            parser.error("parametrize quadric needs --coeffs")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (families.DegenerateA, families.NotSquarefree, DenominatorVanishes, ecrank.NotASquareAtEnds) as exc:
        print(f"degenerate: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
