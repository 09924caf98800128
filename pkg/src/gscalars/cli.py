"""gsc: the command-line front end.

Subcommands: eval, classify, eq, sum, oracle, check.  Output is plain,
line-oriented, deterministic text; the exit code is 0 exactly when no
error line and no FAIL line was emitted.  GSC_SEED fixes the seed of the
randomized verification suites.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import expr as expr_mod
from .errors import Error, ZeroDivisor
from .oracle import FiniteConfig, run_oracle
from .quotient import Classification, Scalar, classify, scalar_eq
from .series import classify_series, generalized_sum
from .sets_filters import FilterDescriptor
from .suites import SUITE_NAMES, run_suite

DEFAULT_SEED = 1729


def parse_filter_flag(text: str) -> FilterDescriptor:
    if text == "frechet":
        return FilterDescriptor.frechet()
    if text.startswith("principal:"):
        set_node = expr_mod.parse_set(text[len("principal:"):])
        return FilterDescriptor.principal(expr_mod.eval_set(set_node))
    raise Error(f"unknown filter {text!r}; use frechet or principal:<set>")


def render_value(value) -> str:
    if isinstance(value, Scalar):
        return f"{expr_mod.render_rseq(value.rep)} [{classify(value)}]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Classification):
        return str(value)
    return str(value)


def error_line(err: Error) -> str:
    if isinstance(err, ZeroDivisor):
        return f"error: ZeroDivisor witness={expr_mod.render_rseq(err.witness.rep)}"
    if isinstance(err, expr_mod.SyntaxError):
        line = f"error: SyntaxError line={err.line} column={err.column}"
        if err.expected:
            line += " expected=" + ",".join(err.expected)
        return line
    return f"error: {err.name}"


def _seed_from_env() -> int:
    raw = os.environ.get("GSC_SEED", "")
    if not raw:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError as exc:
        raise Error(f"GSC_SEED must be an integer, got {raw!r}") from exc


def _emit_reports(reports, out) -> bool:
    ok = True
    for report in reports:
        print(report.render(), file=out)
        ok = ok and report.ok
    return ok


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = argparse.ArgumentParser(
        prog="gsc",
        description="exact non-Archimedean scalar algebra over sequences of rationals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_filter_flag(p):
        p.add_argument("--filter", default="frechet", metavar="FILTER",
                       help="frechet (default) or principal:<set>")

    p_eval = sub.add_parser("eval", help="evaluate an expression")
    p_eval.add_argument("expression")
    add_filter_flag(p_eval)

    p_classify = sub.add_parser("classify", help="classify a scalar expression")
    p_classify.add_argument("expression")
    add_filter_flag(p_classify)

    p_eq = sub.add_parser("eq", help="decide equality of two scalar expressions")
    p_eq.add_argument("left")
    p_eq.add_argument("right")
    add_filter_flag(p_eq)

    p_sum = sub.add_parser("sum", help="series verdict and generalized value")
    p_sum.add_argument("expression")
    add_filter_flag(p_sum)

    p_oracle = sub.add_parser("oracle", help="exhaustive finite verification")
    p_oracle.add_argument("--lambda", dest="lambda_size", type=int, default=3)
    p_oracle.add_argument("--field", type=int, default=2)
    p_oracle.add_argument("--check", default="all", choices=["galois", "maximal-prime", "all"])

    p_check = sub.add_parser("check", help="run a named verification suite")
    p_check.add_argument("suite", choices=[*SUITE_NAMES, "all"])
    p_check.add_argument("--kmax", type=int, default=1000)

    args = parser.parse_args(argv)

    try:
        if args.command in ("eval", "classify", "sum"):
            filt = parse_filter_flag(args.filter)
            node = expr_mod.parse(args.expression)
            if args.command == "eval":
                print(render_value(expr_mod.evaluate(node, filt)), file=out)
            elif args.command == "classify":
                scalar = expr_mod._as_scalar(expr_mod.evaluate(node, filt), filt)
                print(str(classify(scalar)), file=out)
            else:
                scalar = expr_mod._as_scalar(expr_mod.evaluate(node, filt), filt)
                verdict = classify_series(scalar.rep)
                value = generalized_sum(scalar.rep, filt)
                print(f"verdict: {verdict!r}", file=out)
                print(f"value: {render_value(value)}", file=out)
            return 0
        if args.command == "eq":
            filt = parse_filter_flag(args.filter)
            left = expr_mod.evaluate(expr_mod.parse(args.left), filt)
            right = expr_mod.evaluate(expr_mod.parse(args.right), filt)
            result = scalar_eq(
                expr_mod._as_scalar(left, filt), expr_mod._as_scalar(right, filt)
            )
            print("true" if result else "false", file=out)
            return 0
        if args.command == "oracle":
            cfg = FiniteConfig(args.lambda_size, args.field)
            ok = _emit_reports(run_oracle(cfg, args.check), out)
            return 0 if ok else 1
        if args.command == "check":
            seed = _seed_from_env()
            ok = _emit_reports(run_suite(args.suite, seed, kmax=args.kmax), out)
            return 0 if ok else 1
    except Error as err:
        print(error_line(err), file=out)
        return 1
    return 2


if __name__ == "__main__":
    sys.exit(main())
