"""Command-line interface.

Four subcommands:

  gen            construct one polynomial (P or E) and print it as JSON
  table          tabulate one scalar family over an index range
  verify         run the identity suite at a given or random parameter point
  random-params  draw certified random parameter points

Rationals are written as "p/q" strings everywhere; floats are rejected so
exactness survives the round trip.  Exit codes: 0 success / all identities
pass, 1 at least one identity failed, 2 invalid input (parse error,
genericity violation, ...).  The environment variable AWLAB_SEED, when
set, overrides --seed for the commands that take one.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .polynomials import askey_wilson_P, nonsymmetric_E, polynomial_document
from .scalars import (
    GenericityError,
    HorizonError,
    ParamSet,
    alpha_n,
    beta_n,
    check_genericity,
    format_scalar,
    lambda_n,
    mu_n,
    parse_scalar,
    random_param_sets,
)
from .verify import FAULT_TARGETS, run_suite, suite_plan

_PARAM_KEYS = ("q", "a", "b", "c", "d")


class InputError(ValueError):
    """Invalid command-line input; maps to exit code 2."""


def parse_param_string(text: str) -> dict:
    """Parse "q=1/2,a=1/3,b=1/5,c=1/7,d=1/11" into a scalar dict."""
    values = {}
    for chunk in text.split(","):
        key, sep, raw = chunk.partition("=")
        key = key.strip()
        if not sep or key not in _PARAM_KEYS:
            raise InputError(
                f"bad parameter chunk {chunk!r}; expected q=..,a=..,b=..,c=..,d=.."
            )
        if key in values:
            raise InputError(f"parameter {key} given twice")
        try:
            values[key] = parse_scalar(raw.strip())
        except ValueError as exc:
            raise InputError(f"parameter {key}: {exc}") from None
    missing = [k for k in _PARAM_KEYS if k not in values]
    if missing:
        raise InputError(f"missing parameter(s): {', '.join(missing)}")
    return values


def _certify(values: dict, n_max: int) -> ParamSet:
    return check_genericity(
        values["q"], values["a"], values["b"], values["c"], values["d"], n_max
    )


def cmd_gen(args: argparse.Namespace) -> int:
    values = parse_param_string(args.params)
    n = args.n
    p = _certify(values, abs(n))
    if args.kind == "P":
        if n < 0:
            raise InputError("the symmetric family P is indexed by n >= 0")
        poly = askey_wilson_P(n, p)
    else:
        poly = nonsymmetric_E(n, p)
    print(json.dumps(polynomial_document(args.kind, n, p, poly)))
    return 0


_TABLE_RANGES = {
    # quantity -> (function, signed range?)
    "lambda": (lambda_n, False),
    "mu": (mu_n, True),
    "alpha": (alpha_n, False),
    "beta": (beta_n, True),
}


def cmd_table(args: argparse.Namespace) -> int:
    values = parse_param_string(args.params)
    p = _certify(values, args.nmax)
    fn, signed = _TABLE_RANGES[args.quantity]
    lo = -args.nmax if signed else 0
    rows = [(n, format_scalar(fn(n, p))) for n in range(lo, args.nmax + 1)]
    if args.json:
        doc = {
            "quantity": args.quantity,
            "params": p.as_json_dict(),
            "rows": [{"n": n, "value": val} for n, val in rows],
        }
        print(json.dumps(doc))
    else:
        n_width = max(len(str(n)) for n, _ in rows)
        n_width = max(n_width, len("n"))
        print(f"{'n':>{n_width}}  {args.quantity}")
        for n, val in rows:
            print(f"{n:>{n_width}}  {val}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if (args.params is None) == (not args.random):
        raise InputError("choose exactly one of --params or --random")
    if args.random:
        try:
            p = random_param_sets(args.seed, 1, args.nmax)[0]
        except RuntimeError as exc:
            raise InputError(str(exc)) from None
    else:
        p = _certify(parse_param_string(args.params), args.nmax)
    reports = run_suite(
        p,
        n_max=args.nmax,
        trials=args.trials,
        seed=args.seed,
        degree_window=args.degree_window,
        fault=args.inject_fault,
    )
    n_passed = sum(r.passed for r in reports)
    n_failed = len(reports) - n_passed
    if args.json:
        for r in reports:
            print(json.dumps(r.as_json_dict(args.seed)))
    else:
        for r in reports:
            where = "" if r.n is None else f" n={r.n}"
            if r.passed:
                print(f"PASS  {r.identity_id}{where}")
            else:
                print(f"FAIL  {r.identity_id}{where}  residual {r.residual_witness}")
        for identity_id, ns in suite_plan(args.nmax):
            if ns is not None and len(ns) == 0:
                print(f"SKIP  {identity_id}  (empty index range at nmax={args.nmax})")
        point = ",".join(f"{k}={v}" for k, v in p.as_json_dict().items()
                         if k != "nmax")
        print(f"{n_passed}/{len(reports)} identities passed at {point} "
              f"(nmax={args.nmax}, trials={args.trials}, seed={args.seed})")
    return 0 if n_failed == 0 else 1


def cmd_random_params(args: argparse.Namespace) -> int:
    try:
        points = random_param_sets(args.seed, args.trials, args.nmax)
    except RuntimeError as exc:
        raise InputError(str(exc)) from None
    for p in points:
        print(json.dumps(p.as_json_dict()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="awlab",
        description="Exact construction and verification of Askey-Wilson "
                    "polynomial identities.",
        epilog="AWLAB_SEED in the environment overrides --seed when set.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="construct one polynomial and print JSON")
    gen.add_argument("kind", choices=("P", "E"),
                     help="P: symmetric (n >= 0); E: nonsymmetric (any integer)")
    gen.add_argument("--n", type=int, required=True, help="polynomial index")
    gen.add_argument("--params", required=True,
                     help="q=..,a=..,b=..,c=..,d=.. with p/q rational values")
    gen.add_argument("--json", action="store_true",
                     help="accepted for uniformity; gen output is always JSON")
    gen.set_defaults(func=cmd_gen)

    table = sub.add_parser("table", help="tabulate one scalar family")
    table.add_argument("quantity", choices=tuple(_TABLE_RANGES),
                       help="lambda/alpha use n = 0..nmax; mu/beta use -nmax..nmax")
    table.add_argument("--nmax", type=int, required=True)
    table.add_argument("--params", required=True,
                       help="q=..,a=..,b=..,c=..,d=.. with p/q rational values")
    table.add_argument("--json", action="store_true", help="emit one JSON object")
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="run the identity suite at one point")
    verify.add_argument("--params",
                        help="q=..,a=..,b=..,c=..,d=.. with p/q rational values")
    verify.add_argument("--random", action="store_true",
                        help="draw one certified random point instead")
    verify.add_argument("--nmax", type=int, default=8, help="horizon (default 8)")
    verify.add_argument("--trials", type=int, default=25,
                        help="random inputs per randomized check (default 25)")
    verify.add_argument("--seed", type=int, default=42)
    verify.add_argument("--degree-window", type=int, default=6,
                        help="degree window [-w, w] for random inputs (default 6)")
    verify.add_argument("--json", action="store_true",
                        help="one JSON report per line instead of text")
    verify.add_argument("--inject-fault", choices=FAULT_TARGETS,
                        default=None, help=argparse.SUPPRESS)
    verify.set_defaults(func=cmd_verify)

    rnd = sub.add_parser("random-params",
                         help="draw certified random parameter points")
    rnd.add_argument("--seed", type=int, default=42)
    rnd.add_argument("--trials", type=int, default=1,
                     help="number of points to draw (default 1)")
    rnd.add_argument("--nmax", type=int, default=8)
    rnd.set_defaults(func=cmd_random_params)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    env_seed = os.environ.get("AWLAB_SEED")
    if env_seed is not None and hasattr(args, "seed"):
        try:
            args.seed = int(env_seed)
        except ValueError:
            print(f"error: AWLAB_SEED must be an integer, got {env_seed!r}",
                  file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except GenericityError as exc:
        print(f"GenericityError({exc.condition}): {exc.detail}", file=sys.stderr)
        return 2
    except (InputError, HorizonError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
