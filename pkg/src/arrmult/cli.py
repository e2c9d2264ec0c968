"""``arrmult`` command-line tool.

Exit codes: 0 success, 1 input error, 2 resource budget exhausted,
3 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from fractions import Fraction

from . import serialize as ser
from .arrangement import ArrangementError, build_lattice, family, localize, parse_arrangement
from .ideal import BUDGET_PROFILES, BudgetExceeded, set_budget
from .multiplier import (CrossCheckError, METHODS, candidate_jumping_numbers, expand, is_jumping_number,
                         jumping_numbers, lct, left_limit_ideal, multiplier_ideal, set_theoretic_jumping,
                         support)
from . import verify as vf

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_CROSSCHECK = 0, 1, 2, 3

_FRACTION = re.compile(r"^[+-]?\d+(/\d+)?$")


class InputError(ValueError):
    pass


def exact(text: str) -> Fraction:
    """Parse ``p/q`` or an integer; decimals are rejected."""
    if not _FRACTION.match(text.strip()):
        raise argparse.ArgumentTypeError(f"expected an exact fraction p/q or an integer, got {text!r}")
    return Fraction(text.strip())


def positive_exact(text: str) -> Fraction:
    q = exact(text)
    if q <= 0:
        raise argparse.ArgumentTypeError(f"value must be positive, got {text!r}")
    return q


def point(text: str) -> tuple:
    parts = [p for p in text.split(",") if p.strip()]
    return tuple(exact(p) for p in parts)


def _load(path: str):
    if path == "-":
        return parse_arrangement(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_arrangement(text)


def _central(args, allow_at: bool = False):
    arr = _load(args.file)
    at = getattr(args, "at", None)
    if at is not None:
        if not allow_at:
            raise InputError("--at is only accepted by lct and mi")
        return localize(arr, at)
    if not arr.is_central:
        raise InputError("arrangement is not central; pass --at <point> to lct or mi to localize")
    return arr


def _emit(args, human: str, data) -> None:
    if args.json:
        print(ser.dumps(data))
    else:
        print(human)


# ---------------------------------------------------------------- commands

def cmd_lattice(args):
    lat = build_lattice(_central(args))
    rows = ["id  rank  mult  hyperplanes"]
    for w in lat.flats:
        rows.append(f"{lat.index(w):<3} {w.rank:<5} {w.mult:<5} {sorted(w.hyperplane_set)}")
    _emit(args, "\n".join(rows), ser.lattice_json(lat))


def cmd_lct(args):
    arr = _central(args, allow_at=True)
    if arr is None:
        _emit(args, "inf (no hyperplane through the point)", {"lct": None})
        return
    value = lct(arr)
    _emit(args, ser.frac(value), {"lct": ser.frac(value)})


def _ideal_command(args, fn):
    arr = _central(args, allow_at=fn is multiplier_ideal)
    if arr is None:
        _emit(args, "(1)", {"terms": [], "generators": ["1"] if args.expand else None})
        return
    lat = build_lattice(arr)
    fpi = fn(lat, args.lam)
    data = {"lambda": ser.frac(args.lam), "terms": ser.fpi_json(lat, fpi)}
    if fpi.is_unit:
        human = "unit ideal"
    else:
        human = " & ".join(f"I[{lat.index(w)}]^{e}" for w, e in fpi.terms)
    if args.expand:
        gens = ser.ideal_json(expand(fpi, check_degree=args.check_degree))
        data["generators"] = gens
        human = ", ".join(gens)
    _emit(args, human, data)


def cmd_mi(args):
    _ideal_command(args, multiplier_ideal)


def cmd_limit(args):
    _ideal_command(args, left_limit_ideal)


def cmd_support(args):
    lat = build_lattice(_central(args))
    sup = support(lat, args.lam)
    human = "maximal flats: " + (", ".join(str(lat.index(w)) for w in sup.maximal) or "none")
    _emit(args, human, {"lambda": ser.frac(args.lam),
                        "flats": [lat.index(w) for w in sup.flats],
                        "maximal": [lat.index(w) for w in sup.maximal]})


def cmd_candidates(args):
    lat = build_lattice(_central(args))
    cands = candidate_jumping_numbers(lat, args.max)
    _emit(args, ", ".join(ser.frac(v) for v, _ in cands),
          [{"value": ser.frac(v), "witnesses": [{"flat": lat.index(w), "m": m} for w, m in wits]}
           for v, wits in cands])


def cmd_jumping(args):
    lat = build_lattice(_central(args))
    reps = jumping_numbers(lat, args.max, args.method)
    _emit(args, ", ".join(ser.frac(r.value) for r in reps), [ser.report_json(lat, r) for r in reps])


def cmd_settheoretic(args):
    lat = build_lattice(_central(args))
    vals = set_theoretic_jumping(lat)
    _emit(args, ", ".join(ser.frac(v) for v, _ in vals),
          [{"value": ser.frac(v), "witnesses": [lat.index(w) for w in ws]} for v, ws in vals])


def cmd_gen(args):
    arr = family(args.family, n=args.n, d=args.d, s=args.s, seed=args.seed)
    text = arr.to_text()
    if args.json:
        print(ser.dumps({"text": text}))
    else:
        sys.stdout.write(text)


def cmd_verify(args):
    oracle = args.oracle
    if oracle == "membership":
        results = vf.check_membership(args.trials, args.seed)
    elif oracle == "generic":
        if args.n is None or args.d is None:
            raise InputError("--oracle generic needs --n and --d")
        results = vf.check_generic(args.n, args.d, args.seed)
    else:
        if not args.file:
            raise InputError(f"--oracle {oracle} needs an arrangement file")
        lat = build_lattice(_central(args))
        if oracle == "truncation":
            results = vf.check_truncation(lat, args.max, args.degree)
        else:
            results = vf.check_methods(lat, args.max)
    ok = all(r.passed for r in results)
    lines = [f"{'pass' if r.passed else 'FAIL'}  {r.name}  ({r.detail})" for r in results]
    _emit(args, "\n".join(lines), {"passed": ok, "checks": [
        {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]})
    if not ok:
        return EXIT_CROSSCHECK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--budget", choices=sorted(BUDGET_PROFILES), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="arrmult", parents=[common],
                                     description="Multiplier ideals of hyperplane arrangements.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, file=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if file:
            p.add_argument("file", help="arrangement file ('-' for stdin)")
        p.set_defaults(func=fn)
        return p

    add("lattice", cmd_lattice, "list the flats of the intersection lattice")
    p = add("lct", cmd_lct, "log canonical threshold")
    p.add_argument("--at", type=point, help="localize at this point (comma-separated p/q)")
    for name, fn, h in (("mi", cmd_mi, "multiplier ideal"), ("limit", cmd_limit, "left-limit ideal")):
        p = add(name, fn, h)
        p.add_argument("--lambda", dest="lam", type=positive_exact, required=True)
        p.add_argument("--expand", action="store_true", help="print explicit generators")
        p.add_argument("--check-degree", type=int, default=None,
                       help="cross-check the expansion against slice linear algebra up to this degree")
        if name == "mi":
            p.add_argument("--at", type=point)
    p = add("support", cmd_support, "flats in the zero locus of the multiplier ideal")
    p.add_argument("--lambda", dest="lam", type=positive_exact, required=True)
    p = add("candidates", cmd_candidates, "candidate jumping numbers")
    p.add_argument("--max", type=positive_exact, required=True)
    p = add("jumping", cmd_jumping, "jumping numbers")
    p.add_argument("--max", type=positive_exact, required=True)
    p.add_argument("--method", choices=list(METHODS) + ["all"], default="compare")
    add("settheoretic", cmd_settheoretic, "set-theoretic jumping coefficients")

    p = add("verify", cmd_verify, "run an oracle suite", file=False)
    p.add_argument("file", nargs="?")
    p.add_argument("--oracle", choices=["generic", "membership", "truncation", "methods"], required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--degree", type=int, default=8)
    p.add_argument("--max", type=positive_exact, default=Fraction(1))

    p = add("gen", cmd_gen, "print an arrangement from a standard family", file=False)
    p.add_argument("--family", choices=["generic", "pencil", "boolean", "braid"], required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--s", type=int)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    args.json = getattr(args, "json", False)
    args.seed = getattr(args, "seed", 0)
    budget = getattr(args, "budget", None) or os.environ.get("ARRMULT_BUDGET", "default")
    if budget not in BUDGET_PROFILES:
        print(f"error: unknown budget profile {budget!r}", file=sys.stderr)
        return EXIT_INPUT
    previous = set_budget(budget)
    try:
        code = args.func(args)
        return code or EXIT_OK
    except (ArrangementError, InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CrossCheckError as exc:
        print(f"internal cross-check failed: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK
    finally:
        set_budget(previous)


if __name__ == "__main__":
    sys.exit(main())
