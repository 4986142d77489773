"""Print the four worked examples with their full traces.

    python scripts/golden_traces.py                 # aligned text
    python scripts/golden_traces.py --format structured --out traces/
"""

from __future__ import annotations

import argparse
from pathlib import Path

from dixit.digitboard import parse_board
from dixit.medieval_arith import multiply_indian
from dixit.polynomial import divide_tabular, parse_poly, render_poly, sqrt_poly
from dixit.surd import denest, parse_surd_expression
from dixit.trace import render_trace


def golden_runs():
    product, trace = multiply_indian(parse_board("2326"), parse_board("214"), check_invariant=True)
    yield "multiply", trace, f"product {''.join(map(str, product.digits()))}"

    root, trace = denest(parse_surd_expression("16 + s24 + s40 + s48 + s60 + s72 + s120"))
    yield "denest", trace, f"root {root}"

    aggregate = parse_poly("4dcc+12ddc+9cc+20dc+42dd+18c+25d+30r+9", "medieval")
    root, trace = sqrt_poly(aggregate, "medieval")
    yield "sqrt", trace, f"root {render_poly(root, 'medieval')}"

    q, r, trace = divide_tabular(
        parse_poly("6x^8+28x^7+6x^6-80x^5+38x^4+92x^3-200x^2+20x"),
        parse_poly("2x^5+8x^4-20x^2"),
    )
    yield "division", trace, f"quotient {render_poly(q)}; remainder {render_poly(r)}"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "structured"), default="text")
    parser.add_argument("--out", type=Path, help="write one file per example instead of printing")
    args = parser.parse_args()

    for name, trace, summary in golden_runs():
        body = render_trace(trace, args.format)
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            suffix = "json" if args.format == "structured" else "txt"
            (args.out / f"{name}.{suffix}").write_text(body)
            print(f"{name}: {summary}")
        else:
            print(body)
            print(f"=> {summary}\n")


if __name__ == "__main__":
    main()
