"""Command-line front end.

Exit codes: 0 success, 1 domain failure (not denestable, not a perfect
square, division by zero), 2 usage or parse error, 3 verification mismatch.
Results go to stdout, diagnostics to stderr. ``DIXIT_FORMAT`` sets the
default output format.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import oracle
from .digitboard import BoardParseError, board_value, parse_board, render_board
from .medieval_arith import duplicate_multiply, multiply_indian
from .polynomial import (
    DivisionByZeroPolynomial,
    NotPerfectSquare,
    Polynomial,
    PolynomialSyntaxError,
    divide_tabular,
    parse_poly,
    render_poly,
    sqrt_poly,
)
from .polynomial import add as poly_add
from .polynomial import mul as poly_mul
from .polynomial import sub as poly_sub
from .quantity import classify_parity
from .surd import (
    NotDenestable,
    SurdSyntaxError,
    denest,
    parse_surd_expression,
)
from .trace import SCHEMA_VERSION, Trace, render_trace, trace_to_json

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_MISMATCH = 3


class CLIError(Exception):
    def __init__(self, message: str, exit_code: int) -> None:
        super().__init__(message)
        self.exit_code = exit_code


@dataclass
class Outcome:
    command: str
    text: str
    result: Any
    trace: Trace | None = None
    verified: bool | None = None
    exit_code: int = EXIT_OK
    failure: str | None = None
    extra: dict = field(default_factory=dict)


# input helpers --------------------------------------------------------------

class _Stdin:
    """Hands out stdin lines to arguments given as ``-``."""

    def __init__(self) -> None:
        self._lines: list[str] | None = None

    def resolve(self, value: str) -> str:
        if value != "-":
            return value
        if self._lines is None:
            self._lines = [ln.strip() for ln in sys.stdin.read().splitlines() if ln.strip()]
        if not self._lines:
            raise CLIError("stdin ran out of input", EXIT_USAGE)
        return self._lines.pop(0)


def _parse_error(what: str, exc: Exception) -> CLIError:
    return CLIError(f"cannot parse {what}: {exc}", EXIT_USAGE)


# commands -----------------------------------------------------------------

def cmd_multiply(args: argparse.Namespace, stdin: _Stdin) -> Outcome:
    try:
        a = parse_board(stdin.resolve(args.a))
        b = parse_board(stdin.resolve(args.b))
    except BoardParseError as exc:
        raise _parse_error("board", exc) from exc
    run = multiply_indian if args.method == "indian" else duplicate_multiply
    product, trace = run(a, b)
    text = render_board(product, "ascii")
    verified = None
    if args.verify:
        verified = board_value(product) == oracle.oracle_mul_int(board_value(a), board_value(b))
    return Outcome(
        "multiply", text, {"product": product.to_json(), "value": str(board_value(product))},
        trace=trace, verified=verified, extra={"method": args.method},
    )


def cmd_denest(args: argparse.Namespace, stdin: _Stdin) -> Outcome:
    source = stdin.resolve(args.expr)
    try:
        expr = parse_surd_expression(source, require_surd=True)
    except SurdSyntaxError as exc:
        raise _parse_error("surd expression", exc) from exc
    try:
        root, trace = denest(expr)
    except NotDenestable as exc:
        verified = None
        if args.verify:
            bound = min(int(expr.rational.value), 40)
            found = oracle.oracle_denest_search(expr, bound) if _all_integral(expr) else None
            verified = found is None
        return Outcome(
            "denest", "not denestable", None, verified=verified,
            exit_code=EXIT_DOMAIN, failure=str(exc),
        )
    verified = None
    if args.verify:
        rational, surds = oracle.oracle_expand_square([t.value for t in root.terms])
        verified = (rational, surds) == (
            expr.rational.value, tuple(a.value for a in expr.surds)
        )
    return Outcome("denest", str(root), root.to_json(), trace=trace, verified=verified)


def _all_integral(expr) -> bool:
    return expr.rational.is_integer and all(a.is_integer for a in expr.surds)


_POLY_ARITY = {"div": 2, "sqrt": 1, "mul": 2, "add": 2, "sub": 2}


def cmd_poly(args: argparse.Namespace, stdin: _Stdin) -> Outcome:
    want = _POLY_ARITY[args.op]
    if len(args.operands) != want:
        raise CLIError(f"poly {args.op} takes {want} operand(s), got {len(args.operands)}", EXIT_USAGE)
    polys: list[Polynomial] = []
    for i, src in enumerate(args.operands, start=1):
        try:
            polys.append(parse_poly(stdin.resolve(src), args.notation))
        except PolynomialSyntaxError as exc:
            raise _parse_error(f"operand {i}", exc) from exc
    show = lambda p: render_poly(p, args.notation)  # noqa: E731

    if args.op == "div":
        try:
            q, r, trace = divide_tabular(*polys)
        except DivisionByZeroPolynomial as exc:
            return Outcome("poly", "division by zero polynomial", None,
                           exit_code=EXIT_DOMAIN, failure=str(exc))
        verified = None
        if args.verify:
            verified = (q, r) == oracle.oracle_poly_divmod(*polys)
        return Outcome(
            "poly", f"quotient: {show(q)}\nremainder: {show(r)}",
            {"quotient": q.to_json(), "remainder": r.to_json()},
            trace=trace, verified=verified,
            extra={"op": "div", "quotient": show(q), "remainder": show(r)},
        )

    if args.op == "sqrt":
        (p,) = polys
        if p.is_zero:
            raise CLIError("poly sqrt needs a nonzero polynomial", EXIT_USAGE)
        try:
            root, trace = sqrt_poly(p, args.notation)
        except NotPerfectSquare as exc:
            return Outcome("poly", "not a perfect square", None, exit_code=EXIT_DOMAIN,
                           failure=str(exc),
                           extra={"op": "sqrt", "remainder": exc.remainder.to_json()})
        verified = None
        if args.verify:
            verified = oracle.oracle_poly_mul(root, root) == p
        return Outcome("poly", show(root), root.to_json(), trace=trace, verified=verified,
                       extra={"op": "sqrt"})

    ops = {"mul": (poly_mul, oracle.oracle_poly_mul),
           "add": (poly_add, oracle.oracle_poly_add),
           "sub": (poly_sub, oracle.oracle_poly_sub)}
    run, check = ops[args.op]
    out = run(*polys)
    verified = (check(*polys) == out) if args.verify else None
    return Outcome("poly", show(out), out.to_json(), verified=verified, extra={"op": args.op})


def cmd_classify(args: argparse.Namespace, stdin: _Stdin) -> Outcome:
    raw = stdin.resolve(args.n).strip()
    if not raw.isdigit() or int(raw) < 1:
        raise CLIError(f"expected a positive integer, got {raw!r}", EXIT_USAGE)
    kind = classify_parity(int(raw))
    return Outcome("classify", kind.value, kind.value)


# plumbing -------------------------------------------------------------------

def _default_format() -> str:
    env = os.environ.get("DIXIT_FORMAT", "text").strip().lower()
    return env if env in ("text", "json") else "text"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--trace", action="store_true", help="show the step trace")
    common.add_argument("--format", choices=("text", "json"), default=_default_format())
    common.add_argument("--verify", action="store_true",
                        help="cross-check against the reference oracle (exit 3 on mismatch)")

    parser = argparse.ArgumentParser(
        prog="dixit", description="Medieval arithmetic and algebra with exact step traces."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("multiply", parents=[common], help="multiply two numerals")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--method", choices=("indian", "duplication"), default="indian")
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("denest", parents=[common], help="denest sqrt(N + sN + ...)")
    p.add_argument("expr", help='e.g. "16 + s24 + s40 + s48 + s60 + s72 + s120"')
    p.set_defaults(func=cmd_denest)

    p = sub.add_parser("poly", parents=[common], help="polynomial operations")
    p.add_argument("op", choices=tuple(_POLY_ARITY))
    p.add_argument("operands", nargs="+")
    p.add_argument("--notation", choices=("modern", "medieval"), default="modern")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("classify", parents=[common], help="evenly-even / evenly-odd / oddly-even")
    p.add_argument("n")
    p.set_defaults(func=cmd_classify)
    return parser


def _emit(outcome: Outcome, args: argparse.Namespace) -> None:
    if args.format == "json":
        doc = {
            "schema": SCHEMA_VERSION,
            "command": outcome.command,
            **outcome.extra,
            "result": outcome.result,
            "text": outcome.text,
            "verified": outcome.verified,
            "trace": trace_to_json(outcome.trace) if args.trace and outcome.trace else None,
        }
        if outcome.failure:
            doc["failure"] = outcome.failure
        print(json.dumps(doc, indent=2))
        return
    if args.trace and outcome.trace is not None:
        print(render_trace(outcome.trace, "text"), end="")
    print(outcome.text)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        outcome = args.func(args, _Stdin())
    except CLIError as exc:
        print(f"dixit: {exc}", file=sys.stderr)
        return exc.exit_code
    _emit(outcome, args)
    if outcome.failure:
        print(f"dixit: {outcome.failure}", file=sys.stderr)
    if outcome.verified is False:
        print("dixit: verification against the oracle failed", file=sys.stderr)
        return EXIT_MISMATCH
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
