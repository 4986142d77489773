"""Exact reconstructions of medieval Indo-Arabic reckoning.

Board multiplication, duplication and dimidiation, denesting of surd sums,
polynomial square roots and tabular polynomial division, each returning a
step trace alongside its result.
"""

from .digitboard import RING, DigitBoard, board_of_value, board_value, parse_board, render_board
from .medieval_arith import dimidiate, duplicate_multiply, multiply_indian
from .polynomial import Polynomial, divide_tabular, parse_poly, render_poly, sqrt_poly
from .quantity import NOTHING, ParityKind, Quantity, classify_parity, deficiency_compare
from .surd import SurdExpression, SurdSum, denest, expand_square, parse_surd_expression
from .trace import Trace, render_trace

__version__ = "0.1.0"

__all__ = [
    "NOTHING",
    "RING",
    "DigitBoard",
    "ParityKind",
    "Polynomial",
    "Quantity",
    "SurdExpression",
    "SurdSum",
    "Trace",
    "board_of_value",
    "board_value",
    "classify_parity",
    "deficiency_compare",
    "denest",
    "dimidiate",
    "divide_tabular",
    "duplicate_multiply",
    "expand_square",
    "multiply_indian",
    "parse_board",
    "parse_poly",
    "parse_surd_expression",
    "render_board",
    "render_poly",
    "render_trace",
    "sqrt_poly",
]
