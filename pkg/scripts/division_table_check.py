"""Compare the remainder rows of the printed division table with exact arithmetic.

The printed rows below are transcribed cell for cell; each row starts at the
column of the term it eliminates. Exits 0 and lists any disagreeing cells.
"""

from __future__ import annotations

from dixit.polynomial import divide_tabular, division_rows, parse_poly

PRINTED = {
    "First Remainder": ["0", "4", "6", "-20", "38", "92", "-200", "20"],
    "Second Remainder": ["0", "-10", "-20", "78", "92", "-200", "20"],
    "Third Remainder": ["0", "20", "78", "-8", "-200", "20"],
    "Fourth Remainder": ["0", "-2", "8", "0", "20"],
}


def main() -> None:
    _, _, trace = divide_tabular(
        parse_poly("6x^8+28x^7+6x^6-80x^5+38x^4+92x^3-200x^2+20x"),
        parse_poly("2x^5+8x^4-20x^2"),
    )
    for row in division_rows(trace):
        names = list(row.cells)
        exact = list(row.cells.values())
        printed = PRINTED[row.label]
        diffs = [
            f"{names[i]}: printed {p}, exact {e}"
            for i, (p, e) in enumerate(zip(printed, exact))
            if p != e
        ]
        print(f"{row.label:<17} exact   {' '.join(exact)}")
        print(f"{'':<17} printed {' '.join(printed)}")
        print(f"{'':<17} {'agrees' if not diffs else '; '.join(diffs)}")


if __name__ == "__main__":
    main()
