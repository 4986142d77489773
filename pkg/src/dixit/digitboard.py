"""Positional decimal numerals as rows of digit cells and rings.

A cell holds a digit from 1 to 9 or a :data:`RING`, the little circle that
marks an empty position. The ring contributes nothing to the value; it only
keeps the places from collapsing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence, Union

__all__ = [
    "RING",
    "BoardParseError",
    "Cell",
    "DigitBoard",
    "EmptyInput",
    "InvalidCharacter",
    "NonCanonicalLeadingRing",
    "NOTHING_BOARD",
    "Ring",
    "board_of_value",
    "board_value",
    "parse_board",
    "render_board",
]

RING_GLYPH = "O"


class Ring:
    """The empty-place marker. There is exactly one instance, :data:`RING`."""

    _instance: Ring | None = None

    def __new__(cls) -> Ring:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "RING"

    def __reduce__(self):
        return (Ring, ())


RING = Ring()
Cell = Union[int, Ring]


class BoardParseError(ValueError):
    def __init__(self, message: str, position: int = 0) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class EmptyInput(BoardParseError):
    pass


class InvalidCharacter(BoardParseError):
    pass


class NonCanonicalLeadingRing(BoardParseError):
    pass


def _check_cell(cell: object) -> Cell:
    if cell is RING:
        return RING
    if isinstance(cell, int) and not isinstance(cell, bool) and 1 <= cell <= 9:
        return cell
    raise ValueError(f"a cell is a digit 1..9 or RING, got {cell!r}")


@dataclass(frozen=True, slots=True)
class DigitBoard:
    """Cells, most significant first.

    The constructor accepts leading rings so algorithms can keep a fixed
    working width; :meth:`canonical` strips them.
    """

    cells: tuple[Cell, ...]

    def __init__(self, cells: Iterable[Cell]) -> None:
        checked = tuple(_check_cell(c) for c in cells)
        if not checked:
            raise ValueError("a board has at least one cell")
        object.__setattr__(self, "cells", checked)

    @property
    def is_canonical(self) -> bool:
        return self.cells[0] is not RING or self.cells == (RING,)

    def canonical(self) -> DigitBoard:
        for i, c in enumerate(self.cells):
            if c is not RING:
                return DigitBoard(self.cells[i:]) if i else self
        return NOTHING_BOARD

    @property
    def is_nothing(self) -> bool:
        return all(c is RING for c in self.cells)

    def digits(self) -> list[int]:
        """Digit values most significant first, with 0 standing in for rings."""
        return [0 if c is RING else c for c in self.cells]

    def __len__(self) -> int:
        return len(self.cells)

    def __str__(self) -> str:
        return render_board(self)

    def to_json(self) -> list:
        return ["ring" if c is RING else c for c in self.cells]

    @classmethod
    def from_json(cls, data: Sequence) -> DigitBoard:
        return cls(RING if c == "ring" else int(c) for c in data)

    @classmethod
    def from_digits(cls, digits: Sequence[int]) -> DigitBoard:
        """Build from 0..9 digit values, most significant first; 0 becomes a ring."""
        return cls(RING if d == 0 else d for d in digits)


NOTHING_BOARD = DigitBoard([RING])


def parse_board(text: str) -> DigitBoard:
    """Read ``"204"`` or ``"2O4"``. Both ``0`` and ``O`` denote a ring."""
    if not text:
        raise EmptyInput("empty board text", 0)
    cells: list[Cell] = []
    for i, ch in enumerate(text):
        if ch in "0O":
            cells.append(RING)
        elif "1" <= ch <= "9":
            cells.append(int(ch))
        else:
            raise InvalidCharacter(f"invalid character {ch!r}", i)
    if cells[0] is RING and len(cells) > 1:
        raise NonCanonicalLeadingRing("leading ring on a multi-cell board", 0)
    return DigitBoard(cells)


def render_board(
    board: DigitBoard, style: Literal["ring-glyph", "ascii"] = "ring-glyph"
) -> str:
    if style not in ("ring-glyph", "ascii"):
        raise ValueError(f"unknown style {style!r}")
    ring = RING_GLYPH if style == "ring-glyph" else "0"
    return "".join(ring if c is RING else str(c) for c in board.cells)


def board_value(board: DigitBoard) -> int:
    total = 0
    for c in board.cells:
        total = total * 10 + (0 if c is RING else c)
    return total


def board_of_value(n: int) -> DigitBoard:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError("board_of_value needs an int")
    if n < 0:
        raise ValueError("boards hold non-negative values only")
    if n == 0:
        return NOTHING_BOARD
    return DigitBoard.from_digits([int(ch) for ch in str(n)])
