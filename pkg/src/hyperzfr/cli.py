"""Command-line entry point.

Exit codes: 0 success, 1 usage or I/O error, 2 hypothesis failure (a valid
mathematical outcome: no certificate exists for the given parameters).
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from fractions import Fraction

from . import selftest
from .certify import (
    HypothesisFailure,
    SweepRow,
    certify_counterexample,
    check_certificate,
    compare_bounds,
)
from .construct import counterexample, h_construction, s_transform
from .hypergraph import HypergraphError, degree_profile, parse_hypergraph, serialize_hypergraph
from .polynomial import (
    SizeGuardError,
    eval_point_closed_form,
    evaluate_exact,
    independence_poly_bruteforce,
    z_sg_closed_form,
)
from .rigorous import fmt
from .roots import check_zfr_conformance, complex_roots, isolate_real_root

EXIT_OK, EXIT_USAGE, EXIT_HYPOTHESIS = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *a, **kw):
        super().__init__(*a, **kw)
        # let "-1/2" through as a value, not an option
        self._negative_number_matcher = re.compile(r"^-\d+$|^-\d*\.\d+$|^-\d+/\d+$")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args):
    return parse_hypergraph(_read_input(args.input))


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _target(args):
    """Hypergraph whose polynomial is computed, and the polynomial."""
    G = _load(args)
    if getattr(args, "direct", False):
        return G, independence_poly_bruteforce(G)
    if getattr(args, "bruteforce", False):
        SG = s_transform(G)
        return SG, independence_poly_bruteforce(SG)
    return s_transform(G), z_sg_closed_form(G)


# ------------------------------------------------------------------ commands

def cmd_gen_h(args):
    if args.k < 2 or args.delta < args.k:
        raise UsageError("gen-h needs k >= 2 and delta >= k")
    H, p = h_construction(args.k, args.delta)
    sys.stdout.write(serialize_hypergraph(H, meta={"k": args.k, "delta": args.delta, "p": p}) + "\n")


def cmd_counterexample(args):
    if args.k < 3 or args.delta < max(2, args.k - 1):
        raise UsageError("counterexample needs k >= 3 and delta >= max(2, k-1)")
    SH, meta = counterexample(args.k, args.delta)
    sys.stdout.write(serialize_hypergraph(SH, meta=meta.to_dict()) + "\n")


def cmd_transform(args):
    sys.stdout.write(serialize_hypergraph(s_transform(_load(args))) + "\n")


def cmd_poly(args):
    _, P = _target(args)
    _emit({"coeffs": [str(c) for c in P.coeffs]})


def cmd_eval(args):
    x = args.at
    if args.direct:
        G = _load(args)
        _emit({"at": fmt(x), "value": fmt(evaluate_exact(independence_poly_bruteforce(G), x)), "rigorous": True})
        return
    G = _load(args)
    mode = "float" if args.float else "exact"
    val, rigorous = eval_point_closed_form(G, x, mode=mode)
    _emit({"at": fmt(x), "value": repr(val) if mode == "float" else fmt(val), "rigorous": rigorous})


def cmd_roots(args):
    H, P = _target(args)
    delta = degree_profile(H).max_degree if H.n else 0
    out = {"coeffs": [str(c) for c in P.coeffs], "delta": delta}
    found = []
    lo, hi = args.real_interval if args.real_interval else (Fraction(-1), Fraction(0))
    if args.real_interval or not args.complex:
        br = isolate_real_root(P, lo, hi, args.tol) if P.degree >= 1 else None
        out["real_interval"] = [fmt(lo), fmt(hi)]
        out["real"] = None if br is None else br.to_dict()
        if br is not None:
            found.append(br)
    if args.complex and P.degree >= 1:
        res = complex_roots(P, tol=float(args.tol))
        out["complex"] = res.to_dict()
        found.extend(r for r in res.roots if r.residual < 1e-8)
    out["zfr"] = check_zfr_conformance(found, delta).to_dict()
    _emit(out)


def cmd_certify(args):
    if args.k < 3:
        raise UsageError("certify needs k >= 3")
    if args.delta < max(2, args.k - 1):
        raise UsageError("certify needs delta >= max(2, k-1)")
    try:
        cert = certify_counterexample(args.k, args.delta, mode=args.mode)
    except HypothesisFailure as fail:
        _emit(fail.to_dict())
        return EXIT_HYPOTHESIS
    _emit(cert.to_dict())


def cmd_sweep(args):
    if args.C <= 0:
        raise UsageError("--C must be positive")
    if args.k < 3:
        raise UsageError("sweep needs k >= 3")
    rows = []
    for d in args.deltas:
        try:
            rows.append(compare_bounds(args.k, d, args.C))
        except HypothesisFailure as fail:
            sys.stderr.write(f"delta={d}: no certificate ({fail})\n")
            return EXIT_HYPOTHESIS
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(SweepRow.FIELDS)
    for r in rows:
        w.writerow(r.as_strings())


def cmd_selftest(args):
    return EXIT_OK if selftest.run() else EXIT_USAGE


def cmd_verify(args):
    doc = json.loads(_read_input(args.input))
    checks = check_certificate(doc)
    ok = all(c.passed for c in checks)
    _emit({"valid": ok, "checks": [c.to_dict() for c in checks]})
    return EXIT_OK if ok else EXIT_HYPOTHESIS


# ------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="hyperzfr", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def kd(p):
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--delta", type=int, required=True)

    def inp(p):
        p.add_argument("--input", required=True, help="hypergraph JSON file, or - for stdin")

    p = sub.add_parser("gen-h", help="modular-lines hypergraph H_{k,delta}")
    kd(p)
    p.set_defaults(func=cmd_gen_h)

    p = sub.add_parser("counterexample", help="S_H for the odd-trimmed H_{k-1,delta}")
    kd(p)
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("transform", help="S_G of the input hypergraph")
    inp(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("poly", help="independence polynomial of S_G")
    inp(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--closed-form", action="store_true", help="subset-sum formula on G (default)")
    g.add_argument("--bruteforce", action="store_true", help="enumerate independent sets of S_G")
    g.add_argument("--direct", action="store_true", help="polynomial of the input itself, by enumeration")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("eval", help="Z_{S_G} at a rational point")
    inp(p)
    p.add_argument("--at", type=_rational, required=True, metavar="NUM/DEN")
    p.add_argument("--float", action="store_true", help="non-rigorous floating point evaluation")
    p.add_argument("--direct", action="store_true", help="polynomial of the input itself")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("roots", help="real root brackets and complex roots of Z_{S_G}")
    inp(p)
    p.add_argument("--real-interval", nargs=2, type=_rational, metavar=("LO", "HI"))
    p.add_argument("--complex", action="store_true")
    p.add_argument("--tol", type=_rational, default=Fraction(1, 10 ** 12))
    g = p.add_mutually_exclusive_group()
    g.add_argument("--bruteforce", action="store_true")
    g.add_argument("--direct", action="store_true")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("certify", help="root certificate for the counterexample")
    kd(p)
    p.add_argument("--mode", choices=("explicit", "analytic"), default="analytic")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("sweep", help="CSV comparing certified roots with the conjectured radius")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--deltas", type=int, nargs="*", default=[])
    p.add_argument("--C", type=_rational, default=Fraction(1), metavar="NUM/DEN")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("selftest", help="desk-scale oracle and invariant checks")
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("verify", help="re-check a certificate JSON with rational arithmetic only")
    inp(p)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rc = args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"hyperzfr {args.command}: error: {exc}\n")
        return EXIT_USAGE
    except (HypergraphError, SizeGuardError, OSError, json.JSONDecodeError, ValueError) as exc:
        sys.stderr.write(f"hyperzfr {args.command}: error: {exc}\n")
        return EXIT_USAGE
    return EXIT_OK if rc is None else rc


if __name__ == "__main__":
    sys.exit(main())
