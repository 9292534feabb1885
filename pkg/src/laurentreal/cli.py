"""Command-line front-end: expand, eval, kernel-check, divide, enumerate, verify.

Exit codes: 0 success, 2 usage or parse failure, 3 division left a
remainder, 4 enumeration cardinality cap exceeded, 5 property failure.
Reports are deterministic for a fixed seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import formats
from .evaluation import evaluate
from .expansion import expand
from .kernel import KernelGenerator, NotDivisibleError, divide, in_kernel
from .series import RadiusParams
from .truncations import CardinalityCapError, DEFAULT_CAP, count_truncations, enumerate_truncations
from .verify import run_exactness_suite

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_DIVISIBLE = 3
EXIT_CAP_EXCEEDED = 4
EXIT_PROPERTY_FAILURE = 5


@dataclass
class Config:
    params: RadiusParams
    base: int
    max_digits: int
    cardinality_cap: int
    seed: int

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> Config:
        r = formats.parse_rational(getattr(args, "r", None) or "1/2")
        r_prime_arg = getattr(args, "r_prime", None)
        base = getattr(args, "base", None)
        if r_prime_arg is not None:
            r_prime = formats.parse_rational(r_prime_arg)
        elif base is not None:
            r_prime = Fraction(1, base)
        elif r > Fraction(1, 10):
            r_prime = Fraction(1, 10)
        else:
            r_prime = r / 10
        if base is not None and r_prime != Fraction(1, base):
            raise ValueError(f"--base {base} inconsistent with --r-prime {r_prime}")
        if base is None:
            base = r_prime.denominator if r_prime.numerator == 1 else 10
        c_arg = getattr(args, "c", None)
        c = formats.parse_rational(c_arg) if c_arg is not None else None
        return cls(
            params=RadiusParams(r, r_prime, c),
            base=base,
            max_digits=getattr(args, "max_digits", 40),
            cardinality_cap=getattr(args, "cap", DEFAULT_CAP),
            seed=getattr(args, "seed", 42),
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laurentreal",
        description="Exact arithmetic for norm-bounded integral Laurent series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_radius_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--r", help="outer radius as p/q (default 1/2)")
        p.add_argument(
            "--r-prime",
            dest="r_prime",
            help="evaluation point as p/q (default 1/10, or r/10 when r <= 1/10)",
        )

    p_expand = sub.add_parser("expand", help="greedy digit expansion of a rational")
    p_expand.add_argument("x", help="target rational as p/q")
    add_radius_flags(p_expand)
    p_expand.add_argument("--max-digits", dest="max_digits", type=int, default=40)
    p_expand.set_defaults(handler=cmd_expand)

    p_eval = sub.add_parser("eval", help="evaluate a series file at r_prime")
    p_eval.add_argument("file", help="series file (text format; blank file is zero)")
    add_radius_flags(p_eval)
    p_eval.add_argument("--format", choices=("text", "json"), default="text")
    p_eval.add_argument("--decimal", type=int, metavar="N",
                        help="also print N decimal digits with an exactness marker")
    p_eval.add_argument("--json", action="store_true")
    p_eval.set_defaults(handler=cmd_eval)

    p_check = sub.add_parser("kernel-check", help="test kernel membership both ways")
    p_check.add_argument("file")
    add_radius_flags(p_check)
    p_check.add_argument("--base", type=int)
    p_check.add_argument("--json", action="store_true")
    p_check.set_defaults(handler=cmd_kernel_check)

    p_div = sub.add_parser("divide", help="divide a series file by 1 - base*T")
    p_div.add_argument("file")
    add_radius_flags(p_div)
    p_div.add_argument("--base", type=int)
    p_div.set_defaults(handler=cmd_divide)

    p_enum = sub.add_parser("enumerate", help="list a finite truncation set")
    p_enum.add_argument("--m", type=int, required=True, help="truncation degree")
    add_radius_flags(p_enum)
    p_enum.add_argument("--c", required=True, help="norm budget as p/q")
    p_enum.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p_enum.add_argument("--count-only", dest="count_only", action="store_true")
    p_enum.set_defaults(handler=cmd_enumerate)

    p_verify = sub.add_parser("verify", help="run the seeded exactness property suite")
    add_radius_flags(p_verify)
    p_verify.add_argument("--base", type=int)
    p_verify.add_argument("--trials", type=int, default=1000)
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--max-digits", dest="max_digits", type=int, default=40)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(handler=cmd_verify)

    return parser


def _load_series(path: str, fmt: str = "text"):
    text = Path(path).read_text()
    if fmt == "json":
        return formats.series_from_json_dict(json.loads(text))
    return formats.parse_series_text(text)


def cmd_expand(args: argparse.Namespace, config: Config) -> int:
    x = formats.parse_rational(args.x)
    cert = expand(x, config.params, config.max_digits)
    print(json.dumps(formats.certificate_to_json_dict(cert), sort_keys=True))
    return EXIT_OK


def cmd_eval(args: argparse.Namespace, config: Config) -> int:
    series = _load_series(args.file, args.format)
    value = evaluate(series, config.params)
    if args.json:
        report = {"value": formats.format_rational(value)}
        if args.decimal is not None:
            decimal, exact = formats.format_decimal(value, args.decimal)
            report["decimal"] = decimal
            report["exact"] = exact
        print(json.dumps(report, sort_keys=True))
        return EXIT_OK
    print(formats.format_rational(value))
    if args.decimal is not None:
        decimal, exact = formats.format_decimal(value, args.decimal)
        print(f"{decimal} ({'exact' if exact else 'truncated'})")
    return EXIT_OK


def cmd_kernel_check(args: argparse.Namespace, config: Config) -> int:
    series = _load_series(args.file)
    gen = KernelGenerator(config.base)
    member = in_kernel(series, config.params)
    try:
        quotient = divide(series, gen)
        division = {"divisible": True, "quotient": formats.series_to_json_dict(quotient)}
    except NotDivisibleError as exc:
        division = {
            "divisible": False,
            "remainder": formats.series_to_json_dict(exc.remainder),
        }
    agree = member == division["divisible"]
    report = {
        "base": config.base,
        "evaluates_to_zero": member,
        "division": division,
        "routes_agree": agree,
    }
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print(f"evaluates to zero at 1/{config.base}: {member}")
        print(f"divisible by 1 - {config.base}*T: {division['divisible']}")
        print(f"routes agree: {agree}")
    return EXIT_OK if agree else EXIT_PROPERTY_FAILURE


def cmd_divide(args: argparse.Namespace, config: Config) -> int:
    series = _load_series(args.file)
    gen = KernelGenerator(config.base)
    try:
        quotient = divide(series, gen)
    except NotDivisibleError as exc:
        print(f"not divisible by 1 - {config.base}*T; remainder follows", file=sys.stderr)
        sys.stdout.write(formats.format_series_text(exc.remainder))
        return EXIT_NOT_DIVISIBLE
    sys.stdout.write(formats.format_series_text(quotient))
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace, config: Config) -> int:
    if args.count_only:
        print(count_truncations(args.m, config.params, config.cardinality_cap))
        return EXIT_OK
    truncations = enumerate_truncations(args.m, config.params, config.cardinality_cap)
    for tup in truncations:
        print(",".join(str(a) for a in tup))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: Config) -> int:
    results = run_exactness_suite(
        config.params,
        trials=args.trials,
        seed=config.seed,
        max_digits=config.max_digits,
    )
    if args.json:
        report = {
            "seed": config.seed,
            "trials": args.trials,
            "r": formats.format_rational(config.params.r),
            "r_prime": formats.format_rational(config.params.r_prime),
            "base": config.base,
            "properties": [r.to_dict() for r in results],
            "passed": all(r.passed for r in results),
        }
        print(json.dumps(report, sort_keys=True))
    else:
        for result in results:
            status = "PASS" if result.passed else "FAIL"
            print(f"{status} {result.name} (trials={result.trials}, failures={result.failures})")
    return EXIT_OK if all(r.passed for r in results) else EXIT_PROPERTY_FAILURE


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = Config.from_args(args)
        return args.handler(args, config)
    except CardinalityCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
