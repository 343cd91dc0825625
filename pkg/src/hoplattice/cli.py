"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 precondition failure (e.g. a
non-primitive ``--poly``), 4 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import List, Optional, Sequence

from . import gf, metrics, oracle, polyalg
from .errors import HopLatticeError, NotPrimitive
from .pattern import CompanionPattern, LinearPattern, Pattern, companion_matrix

EXIT_OK, EXIT_INVALID, EXIT_PRECONDITION, EXIT_VERIFY = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def parse_poly(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise UsageError(f"bad polynomial coefficient list {text!r}")


def build_companion(p: int, k: int, r: int, poly: Optional[Sequence[int]] = None) -> CompanionPattern:
    if r < 1:
        raise UsageError("r must be >= 1")
    F = gf.field_new(p, k)
    if poly is None:
        f = polyalg.find_primitive(F, r + 1)
    else:
        coeffs = list(poly)
        if len(coeffs) == r + 1:
            coeffs.append(1)
        elif not (len(coeffs) == r + 2 and coeffs[-1] == 1):
            raise UsageError(f"--poly needs {r + 1} coefficients (leading 1 implied), got {len(poly)}")
        f = polyalg.monic(F, coeffs)
    return CompanionPattern(F, r, f)


def describe(P: Pattern) -> dict:
    if isinstance(P, CompanionPattern):
        return {"kind": P.kind, "p": P.field.p, "k": P.field.k, "q": P.field.q,
                "r": P.r, "poly": list(P.poly.coeffs)}
    return {"kind": P.kind, "m": P.frame.m, "n": P.frame.n}


def report_json(P: Pattern, cap: int) -> dict:
    R = metrics.evaluate(P, cap=cap)
    out = {"pattern": describe(P),
           "frame_structure": {"m": P.frame.m, "n": P.frame.n},
           "period": P.period}
    out.update(R.to_dict())
    out["meets_bound"] = {
        "max_collision_ratio": R.ratio_meets_bound,
        "max_continual": R.continual_meets_bound,
    }
    return out


def _pattern_from_args(args) -> Pattern:
    if args.kind == "companion":
        poly = parse_poly(args.poly) if args.poly else None
        return build_companion(args.p, args.k, args.r, poly)
    return LinearPattern(args.m, args.n)


def parse_spec(text: str) -> Pattern:
    """``companion:p=3,k=1,r=1[,poly=2,1]`` or ``linear:m=3,n=3``.

    A bare number after ``poly=`` continues the coefficient list.
    """
    kind, _, rest = text.partition(":")
    values: dict = {}
    last = None
    for tok in filter(None, rest.split(",")):
        if "=" in tok:
            last, val = tok.split("=", 1)
            values[last] = [val]
        elif last is not None:
            values[last].append(tok)
        else:
            raise UsageError(f"bad pattern spec {text!r}")
    try:
        if kind == "companion":
            poly = [int(x) for x in values["poly"]] if "poly" in values else None
            return build_companion(int(values["p"][0]), int(values.get("k", ["1"])[0]),
                                   int(values["r"][0]), poly)
        if kind == "linear":
            return LinearPattern(int(values["m"][0]), int(values["n"][0]))
    except (KeyError, ValueError) as exc:
        if isinstance(exc, HopLatticeError):
            raise
        raise UsageError(f"bad pattern spec {text!r}: {exc}")
    raise UsageError(f"unknown pattern kind {kind!r}")


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def cmd_find_poly(args, out) -> int:
    F = gf.field_new(args.p, args.k)
    if args.degree < 1:
        raise UsageError("degree must be >= 1")
    f = polyalg.find_primitive(F, args.degree)
    out.write(_dump({
        "field": {"p": F.p, "k": F.k, "q": F.q,
                  "modulus": None if F.modulus is None else list(F.modulus)},
        "degree": f.degree,
        "coefficients": list(f.coeffs),
        "polynomial": str(f),
        "order": polyalg.order_of_x(f),
        "certificate": polyalg.order_certificate(f),
    }) + "\n")
    return EXIT_OK


def cmd_eval(args, out) -> int:
    P = _pattern_from_args(args)
    out.write(_dump(report_json(P, args.cap)) + "\n")
    return EXIT_OK


def cmd_schedule(args, out) -> int:
    P = _pattern_from_args(args)
    if not 0 <= args.t0 <= args.t1 <= 10 * P.period:
        raise UsageError(f"need 0 <= t0 <= t1 <= {10 * P.period}, got [{args.t0}, {args.t1})")
    rows = P.schedule(args.t0, args.t1)
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["t", "s", "i", "j"])
        w.writerows(rows)
    else:
        out.write(_dump({
            "frame_structure": {"m": P.frame.m, "n": P.frame.n},
            "kind": P.kind,
            "period": P.period,
            "rows": [list(r) for r in rows],
        }) + "\n")
    return EXIT_OK


def cmd_compare(args, out) -> int:
    A, B = parse_spec(args.spec_a), parse_spec(args.spec_b)
    if A.frame != B.frame:
        raise UsageError(f"frame structures differ: {tuple(A.frame)} vs {tuple(B.frame)}")
    reports = [report_json(P, args.cap) for P in (A, B)]
    out.write(_dump({
        "frame_structure": {"m": A.frame.m, "n": A.frame.n},
        "bounds": reports[0]["bounds"],
        "patterns": reports,
        "attains_bound": {
            key: [i for i, rep in enumerate(reports) if rep["meets_bound"][key]]
            for key in ("max_collision_ratio", "max_continual")
        },
    }) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    F = gf.field_new(args.p, args.k)
    if args.r < 1:
        raise UsageError("r must be >= 1")
    if F.q ** (args.r + 1) >= oracle.EXHAUSTIVE_CAP:
        raise UsageError(f"cap exceeded: q^(r+1) = {F.q ** (args.r + 1)} "
                         f"must be below {oracle.EXHAUSTIVE_CAP}")
    P = build_companion(args.p, args.k, args.r, parse_poly(args.poly) if args.poly else None)
    verdicts = oracle.run_all(companion_matrix(P.poly))
    out.write(_dump([v.to_dict() for v in verdicts]) + "\n")
    return EXIT_OK if all(verdicts) else EXIT_VERIFY


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------

def _add_pattern_kinds(sub: argparse.ArgumentParser):
    kinds = sub.add_subparsers(dest="kind", required=True)
    comp = kinds.add_parser("companion", help="companion-matrix pattern over F_{p^k}")
    comp.add_argument("--p", type=int, required=True)
    comp.add_argument("--k", type=int, default=1)
    comp.add_argument("--r", type=int, required=True)
    comp.add_argument("--poly", help="c_0,...,c_r as element indices (leading 1 implied)")
    lin = kinds.add_parser("linear", help="baseline j(t) = j0 + i0*t mod n")
    lin.add_argument("--m", type=int, required=True)
    lin.add_argument("--n", type=int, required=True)
    return comp, lin


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hoplattice",
                                     description="Companion-matrix hopping patterns and their metrics.")
    cmds = parser.add_subparsers(dest="command", required=True)

    fp = cmds.add_parser("find-poly", help="canonical primitive polynomial over F_{p^k}")
    fp.add_argument("--p", type=int, required=True)
    fp.add_argument("--k", type=int, default=1)
    fp.add_argument("--degree", type=int, required=True)
    fp.set_defaults(func=cmd_find_poly)

    ev = cmds.add_parser("eval", help="evaluate one pattern")
    for kp in _add_pattern_kinds(ev):
        kp.add_argument("--cap", type=int, default=metrics.DEFAULT_CONTINUAL_CAP)
    ev.set_defaults(func=cmd_eval)

    sc = cmds.add_parser("schedule", help="export slots for a frame range")
    for kp in _add_pattern_kinds(sc):
        kp.add_argument("--t0", type=int, default=0)
        kp.add_argument("--t1", type=int, required=True)
        kp.add_argument("--format", choices=("csv", "json"), default="csv")
    sc.set_defaults(func=cmd_schedule)

    cp = cmds.add_parser("compare", help="compare two patterns on the same frame structure")
    cp.add_argument("spec_a", help="e.g. companion:p=3,r=1")
    cp.add_argument("spec_b", help="e.g. linear:m=3,n=3")
    cp.add_argument("--cap", type=int, default=metrics.DEFAULT_CONTINUAL_CAP)
    cp.set_defaults(func=cmd_compare)

    vf = cmds.add_parser("verify", help="run the brute-force oracle suite")
    vf.add_argument("--p", type=int, required=True)
    vf.add_argument("--k", type=int, default=1)
    vf.add_argument("--r", type=int, required=True)
    vf.add_argument("--poly")
    vf.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except NotPrimitive as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    except (UsageError, HopLatticeError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
