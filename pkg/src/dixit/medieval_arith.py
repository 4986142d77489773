"""Board multiplication, duplication and dimidiation.

:func:`multiply_indian` works in place on a single line of digits: each
multiplicand digit, taken from the highest place down, is replaced by its
product with the multiplier, and the overlap with what is already written is
merged by column addition. Only single-digit products and sums are used, as
one would do by hand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .digitboard import NOTHING_BOARD, DigitBoard, board_value
from .quantity import Quantity
from .trace import BoardSnapshot, TableRow, TableRows, Trace, TraceRecorder

__all__ = [
    "InvariantViolation",
    "MultiplicationState",
    "dimidiate",
    "duplicate_multiply",
    "iter_multiplication",
    "multiply_indian",
]


class InvariantViolation(AssertionError):
    pass


@dataclass(frozen=True)
class MultiplicationState:
    """Working line after a stage.

    ``stage`` counts processed multiplicand digits from the most significant
    one (0 is the first); ``shift`` is how many places the multiplier has
    moved so far. ``grown`` counts cells a carry added on the left beyond
    the span of the partial product. The rest is presentation data.
    """

    board: DigitBoard
    multiplier: DigitBoard
    shift: int
    stage: int
    before: DigitBoard
    partial: DigitBoard | None
    column: int
    grown: int


def _lsd(board: DigitBoard) -> list[int]:
    """Digits least significant first, rings as 0."""
    return board.digits()[::-1]


def _board_from_lsd(work: list[int]) -> DigitBoard:
    top = len(work)
    while top > 1 and work[top - 1] == 0:
        top -= 1
    return DigitBoard.from_digits(work[:top][::-1])


def _digit_times(d: int, multiplier: list[int]) -> list[int]:
    """d times a multi-digit number, one table product at a time."""
    out: list[int] = []
    carry = 0
    for m in multiplier:
        carry, digit = divmod(d * m + carry, 10)
        out.append(digit)
    while carry:
        carry, digit = divmod(carry, 10)
        out.append(digit)
    return out


def _add_into(work: list[int], digits: list[int], column: int) -> None:
    """Column addition of ``digits`` into ``work`` starting at ``column``; grows left."""
    carry = 0
    i = 0
    while i < len(digits) or carry:
        pos = column + i
        if pos >= len(work):
            work.append(0)
        total = work[pos] + (digits[i] if i < len(digits) else 0) + carry
        carry, work[pos] = divmod(total, 10)
        i += 1


def _add_lsd(x: list[int], y: list[int]) -> list[int]:
    out = list(x)
    _add_into(out, y, 0)
    return out


def iter_multiplication(a: DigitBoard, b: DigitBoard) -> Iterator[MultiplicationState]:
    """Yield the working line after each multiplicand digit is processed.

    Loop invariant after stage i with k places still to process:
    value(board) == prefix_i * value(b) * 10**k + suffix_i.
    """
    a, b = a.canonical(), b.canonical()
    if a.is_nothing or b.is_nothing:
        return
    mult = _lsd(b)
    work = _lsd(a)
    n = len(work)
    for stage in range(n):
        column = n - 1 - stage
        before = _board_from_lsd(work)
        d = work[column]
        width = len(work)
        partial = None
        span = width
        if d:
            product = _digit_times(d, mult)
            partial = _board_from_lsd(product)
            span = max(width, column + len(product))
            work[column] = 0
            _add_into(work, product, column)
        yield MultiplicationState(
            board=_board_from_lsd(work),
            multiplier=b,
            shift=min(stage + 1, n - 1),
            stage=stage,
            before=before,
            partial=partial,
            column=column,
            grown=len(work) - span,
        )


def check_state(state: MultiplicationState, a: DigitBoard, b: DigitBoard) -> None:
    digits = a.canonical().digits()
    k = len(digits) - 1 - state.stage
    prefix = int("".join(map(str, digits[: state.stage + 1])))
    suffix = int("".join(map(str, digits[state.stage + 1 :])) or "0")
    expected = prefix * board_value(b) * 10**k + suffix
    if board_value(state.board) != expected:
        raise InvariantViolation(
            f"stage {state.stage}: board {board_value(state.board)} != {expected}"
        )


def multiply_indian(
    a: DigitBoard, b: DigitBoard, *, check_invariant: bool = False
) -> tuple[DigitBoard, Trace]:
    """Multiply on a single working line, highest multiplicand digit first.

    Returns the product board and a trace with one board snapshot per
    multiplicand digit (rings included, as no-op stages). With
    ``check_invariant`` the loop invariant is checked after every stage.
    """
    rec = TraceRecorder("multiply_indian")
    product = NOTHING_BOARD
    mtext = "".join(str(d) for d in b.digits())
    for state in iter_multiplication(a, b):
        if check_invariant:
            check_state(state, a, b)
        if state.partial is None:
            label = f"stage {state.stage + 1}: ring, nothing results"
        else:
            d = state.before.digits()[::-1][state.column]
            label = (
                f"stage {state.stage + 1}: {d} x {mtext} = "
                f"{''.join(map(str, state.partial.digits()))}"
            )
        rec.add(
            label,
            BoardSnapshot(
                board=state.board,
                multiplier=state.multiplier,
                multiplier_column=state.column,
                next_column=max(state.column - 1, 0),
                shift=state.shift,
                before=state.before if state.partial is not None else None,
                upper=state.partial,
                upper_column=state.column,
                grown=state.grown,
            ),
        )
        product = state.board
    return product, rec.build()


def _digits_text(lsd: list[int]) -> str:
    return "".join(map(str, lsd[::-1])).lstrip("0") or "0"


def duplicate_multiply(a: DigitBoard, b: DigitBoard) -> tuple[DigitBoard, Trace]:
    """Multiply by doubling: write b as distinct powers of two, sum those rows.

    The ladder a, 2a, 4a, ... is built by adding each row to itself; the
    selected rows are taken greatest power first.
    """
    rec = TraceRecorder("duplicate_multiply")
    a, b = a.canonical(), b.canonical()
    n = board_value(b)
    if a.is_nothing or n == 0:
        return NOTHING_BOARD, rec.build()
    columns = ("power", "row", "selected")
    ladder = [_lsd(a)]
    while 1 << len(ladder) <= n:
        ladder.append(_add_lsd(ladder[-1], ladder[-1]))
    for k, row in enumerate(ladder):
        selected = bool(n >> k & 1)
        rec.add(
            f"double {k}" if k else "row 1",
            TableRows(
                columns,
                (TableRow(f"{1 << k} x", {
                    "power": str(1 << k),
                    "row": _digits_text(row),
                    "selected": "yes" if selected else "no",
                }),),
            ),
        )
    total: list[int] = [0]
    rows = []
    for k in reversed(range(len(ladder))):
        if n >> k & 1:
            total = _add_lsd(total, ladder[k])
            rows.append(TableRow(f"+ {1 << k} x", {
                "power": str(1 << k), "row": _digits_text(ladder[k]), "selected": "yes",
            }))
    rows.append(TableRow("sum", {"row": _digits_text(total)}))
    rec.add("sum of selected rows", TableRows(columns, tuple(rows)))
    return _board_from_lsd(total), rec.build()


def dimidiate(a: DigitBoard, halvings: int) -> tuple[Quantity, Trace]:
    """Halve ``halvings`` times, keeping the fractional remainder exactly."""
    if isinstance(halvings, bool) or not isinstance(halvings, int) or halvings < 1:
        raise ValueError("halvings must be a positive integer")
    rec = TraceRecorder("dimidiate")
    columns = ("divisor", "integer", "fraction")
    current = Fraction(board_value(a))
    for k in range(1, halvings + 1):
        current /= 2
        whole = current.numerator // current.denominator
        frac = current - whole
        rec.add(
            f"halving {k}",
            TableRows(columns, (TableRow(f"/{1 << k}", {
                "divisor": str(1 << k),
                "integer": str(whole),
                "fraction": str(frac) if frac else "",
            }),)),
        )
    return Quantity(current), rec.build()
