"""Univariate polynomials with exact coefficients and r/d/c degree names.

Degrees are written either in modern form (``-80x^5 + 20x + 9``) or with
letters whose weights add up: r (root) = 1, d (dynamis) = 2, c (cube) = 3,
so ``dcc`` is the eighth degree and ``ddc`` the seventh.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Literal, Mapping

from .quantity import NOTHING, Quantity, QuantityLike, exact_sqrt
from .trace import Note, TableRow, TableRows, Trace, TraceRecorder

__all__ = [
    "DegreeName",
    "DivisionByZeroPolynomial",
    "NotPerfectSquare",
    "Polynomial",
    "PolynomialSyntaxError",
    "UnknownLetter",
    "add",
    "degree_name",
    "divide_tabular",
    "division_rows",
    "mul",
    "name_exponent",
    "parse_poly",
    "render_poly",
    "sqrt_partials",
    "sqrt_poly",
    "sub",
]

Notation = Literal["modern", "medieval"]
LETTER_WEIGHTS = {"r": 1, "d": 2, "c": 3}


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownLetter(PolynomialSyntaxError):
    pass


class DivisionByZeroPolynomial(ZeroDivisionError):
    pass


class NotPerfectSquare(ValueError):
    """No polynomial with rational coefficients squares to the input.

    ``remainder`` is what was left when extraction stopped.
    """

    def __init__(self, message: str, remainder: Polynomial) -> None:
        super().__init__(message)
        self.remainder = remainder


# degree names -------------------------------------------------------------

def degree_name(n: int) -> str:
    """Canonical letter name of degree ``n``; degree 0 is ``units``."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    if n == 0:
        return "units"
    if n == 1:
        return "r"
    if n % 3 == 0:
        return "c" * (n // 3)
    if n % 3 == 2:
        return "d" + "c" * ((n - 2) // 3)
    return "dd" + "c" * ((n - 4) // 3)


def name_exponent(letters: str) -> int:
    if letters == "units":
        return 0
    try:
        return sum(LETTER_WEIGHTS[ch] for ch in letters)
    except KeyError as exc:
        raise ValueError(f"unknown degree letter {exc.args[0]!r}") from None


@dataclass(frozen=True)
class DegreeName:
    letters: str

    @property
    def exponent(self) -> int:
        return name_exponent(self.letters)

    @classmethod
    def canonical(cls, n: int) -> DegreeName:
        return cls(degree_name(n))

    def __str__(self) -> str:
        return self.letters


# the polynomial type ------------------------------------------------------

class Polynomial:
    """Sparse map from degree to a non-nothing :class:`Quantity`.

    Immutable; arithmetic returns new polynomials.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, QuantityLike] | None = None) -> None:
        clean: dict[int, Quantity] = {}
        for deg, c in (coeffs or {}).items():
            if isinstance(deg, bool) or not isinstance(deg, int) or deg < 0:
                raise ValueError(f"bad degree {deg!r}")
            q = c if isinstance(c, Quantity) else Quantity(c)
            if q:
                clean[deg] = q
        self._coeffs = clean

    @classmethod
    def _raw(cls, coeffs: dict[int, Quantity]) -> Polynomial:
        p = object.__new__(cls)
        p._coeffs = {d: c for d, c in coeffs.items() if c}
        return p

    @classmethod
    def monomial(cls, coeff: QuantityLike, degree: int) -> Polynomial:
        return cls({degree: coeff})

    @property
    def coefficients(self) -> dict[int, Quantity]:
        return dict(self._coeffs)

    @property
    def degree(self) -> int | None:
        return max(self._coeffs) if self._coeffs else None

    @property
    def low_degree(self) -> int | None:
        return min(self._coeffs) if self._coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading_coefficient(self) -> Quantity:
        return self._coeffs[max(self._coeffs)] if self._coeffs else NOTHING

    def leading_term(self) -> Polynomial:
        d = self.degree
        return Polynomial._raw({d: self._coeffs[d]}) if d is not None else self

    def coefficient(self, degree: int) -> Quantity:
        return self._coeffs.get(degree, NOTHING)

    def terms(self) -> Iterator[tuple[int, Quantity]]:
        """(degree, coefficient) pairs, highest degree first."""
        for d in sorted(self._coeffs, reverse=True):
            yield d, self._coeffs[d]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: Polynomial) -> Polynomial:
        return add(self, other)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return sub(self, other)

    def __mul__(self, other: Polynomial | QuantityLike) -> Polynomial:
        if isinstance(other, Polynomial):
            return mul(self, other)
        k = Quantity(other)
        return Polynomial._raw({d: c * k for d, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({d: -c for d, c in self._coeffs.items()})

    def shift(self, by: int) -> Polynomial:
        """Multiply by x**by."""
        return Polynomial._raw({d + by: c for d, c in self._coeffs.items()})

    def to_json(self) -> dict:
        return {str(d): c.to_json() for d, c in self.terms()}

    @classmethod
    def from_json(cls, data: Mapping[str, dict]) -> Polynomial:
        return cls({int(d): Quantity.from_json(c) for d, c in data.items()})

    def __str__(self) -> str:
        return render_poly(self, "modern")

    def __repr__(self) -> str:
        return f"Polynomial({render_poly(self, 'modern')!r})"


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    out = dict(p._coeffs)
    for d, c in q._coeffs.items():
        out[d] = out[d] + c if d in out else c
    return Polynomial._raw(out)


def sub(p: Polynomial, q: Polynomial) -> Polynomial:
    out = dict(p._coeffs)
    for d, c in q._coeffs.items():
        out[d] = out[d] - c if d in out else -c
    return Polynomial._raw(out)


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    out: dict[int, Quantity] = {}
    for d1, c1 in p._coeffs.items():
        for d2, c2 in q._coeffs.items():
            d = d1 + d2
            prod = c1 * c2
            out[d] = out[d] + prod if d in out else prod
    return Polynomial._raw(out)


# text ---------------------------------------------------------------------

def _coef_text(mag: Fraction, has_var: bool) -> str:
    if has_var and mag == 1:
        return ""
    if mag.denominator == 1:
        return str(mag.numerator)
    return f"({mag})" if has_var else str(mag)


def _var_text(degree: int, notation: Notation) -> str:
    if degree == 0:
        return ""
    if notation == "medieval":
        return degree_name(degree)
    return "x" if degree == 1 else f"x^{degree}"


def render_poly(p: Polynomial, notation: Notation = "modern") -> str:
    """Highest degree first; deficient coefficients take a minus sign."""
    if notation not in ("modern", "medieval"):
        raise ValueError(f"unknown notation {notation!r}")
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for i, (d, c) in enumerate(p.terms()):
        body = _coef_text(c.magnitude, d > 0) + _var_text(d, notation)
        if i == 0:
            parts.append(("-" if c.is_deficient else "") + body)
        else:
            parts.append(("- " if c.is_deficient else "+ ") + body)
    return " ".join(parts)


class _Parser:
    def __init__(self, text: str, notation: Notation) -> None:
        self.text = text
        self.notation = notation
        self.pos = 0

    def error(self, message: str, cls=PolynomialSyntaxError):
        return cls(message, self.pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self) -> None:
        while self.peek().isspace():
            self.pos += 1

    def integer(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a number")
        return int(self.text[start:self.pos])

    def coefficient(self) -> Fraction | None:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            self.skip_ws()
            num = self.integer()
            self.skip_ws()
            den = 1
            if self.peek() == "/":
                self.pos += 1
                self.skip_ws()
                den = self.integer()
            self.skip_ws()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
        elif ch.isdigit():
            num = self.integer()
            den = 1
            if self.peek() == "/":
                self.pos += 1
                den = self.integer()
        else:
            return None
        if den == 0:
            raise self.error("zero denominator")
        return Fraction(num, den)

    def variable(self) -> int | None:
        if self.notation == "modern":
            if self.peek() != "x":
                if self.peek().isalpha():
                    raise self.error(f"unexpected letter {self.peek()!r}")
                return None
            self.pos += 1
            self.skip_ws()
            if self.peek() == "^":
                self.pos += 1
                self.skip_ws()
                return self.integer()
            return 1
        start = self.pos
        while self.peek().isalpha():
            self.pos += 1
        word = self.text[start:self.pos]
        if not word:
            return None
        if word == "units":
            return 0
        for i, ch in enumerate(word):
            if ch not in LETTER_WEIGHTS:
                self.pos = start + i
                raise self.error(f"unknown degree letter {ch!r}", UnknownLetter)
        return name_exponent(word)

    def term(self) -> tuple[int, Fraction]:
        start = self.pos
        coef = self.coefficient()
        self.skip_ws()
        if coef is not None and self.peek() == "*":
            self.pos += 1
            self.skip_ws()
        degree = self.variable()
        if coef is None and degree is None:
            self.pos = start
            raise self.error("expected a term")
        return (degree or 0), (Fraction(1) if coef is None else coef)

    def parse(self) -> Polynomial:
        self.skip_ws()
        if not self.peek():
            raise self.error("empty polynomial")
        coeffs: dict[int, Fraction] = {}
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
            self.skip_ws()
        while True:
            deg, c = self.term()
            coeffs[deg] = coeffs.get(deg, Fraction(0)) + sign * c
            self.skip_ws()
            ch = self.peek()
            if not ch:
                break
            if ch not in "+-":
                raise self.error(f"unexpected {ch!r}")
            sign = -1 if ch == "-" else 1
            self.pos += 1
            self.skip_ws()
        return Polynomial(coeffs)


def parse_poly(text: str, notation: Notation = "modern") -> Polynomial:
    """Parse modern (``6x^8 - 80x^5 + 20x``) or letter (``4dcc + 30r + 9``) text.

    Like-degree terms are combined. Letter order inside a name is free.
    """
    if notation not in ("modern", "medieval"):
        raise ValueError(f"unknown notation {notation!r}")
    return _Parser(text, notation).parse()


# tabular division ---------------------------------------------------------

_ORDINALS = (
    "First", "Second", "Third", "Fourth", "Fifth", "Sixth",
    "Seventh", "Eighth", "Ninth", "Tenth", "Eleventh", "Twelfth",
)


def _remainder_label(k: int) -> str:
    word = _ORDINALS[k - 1] if k <= len(_ORDINALS) else f"{k}th"
    return f"{word} Remainder"


def _row(label: str, p: Polynomial, lo: int, hi: int) -> TableRow:
    """Cells for degrees hi..lo inclusive, zeros shown."""
    return TableRow(label, {
        degree_name(d): p.coefficient(d).plain() for d in range(hi, lo - 1, -1)
    })


def _sparse_row(label: str, p: Polynomial) -> TableRow:
    return TableRow(label, {degree_name(d): c.plain() for d, c in p.terms()})


def _divisor_row(divisor: Polynomial, shift: int) -> TableRow:
    shifted = divisor.shift(shift)
    return _row("divisor", shifted, shifted.low_degree, shifted.degree)


def divide_tabular(
    dividend: Polynomial, divisor: Polynomial
) -> tuple[Polynomial, Polynomial, Trace]:
    """Long division laid out as a table with one column per degree.

    Each step divides the leading term of the current remainder by the
    leading term of the divisor and records the quotient so far, the new
    remainder and the divisor at the alignment just used.
    """
    if divisor.is_zero:
        raise DivisionByZeroPolynomial("division by the zero polynomial")
    rec = TraceRecorder("divide_tabular")
    top = max(dividend.degree or 0, divisor.degree)
    columns = tuple(degree_name(d) for d in range(top, -1, -1))
    dd = divisor.degree
    lead = divisor.leading_coefficient
    remainder = dividend
    quotient = Polynomial()

    first_shift = (dividend.degree - dd) if dividend.degree is not None else 0
    lows = [d for d in (dividend.low_degree,) if d is not None]
    rec.add("setup", TableRows(columns, (
        TableRow("quotient", {}),
        _row("dividend", dividend, dividend.low_degree, dividend.degree)
        if dividend else TableRow("dividend", {}),
        _divisor_row(divisor, max(first_shift, 0)),
    )))

    step = 0
    while remainder and remainder.degree >= dd:
        step += 1
        hi = remainder.degree
        shift = hi - dd
        term = Polynomial._raw({shift: remainder.leading_coefficient / lead})
        quotient = quotient + term
        remainder = remainder - term * divisor
        lows.append(divisor.low_degree + shift)
        rec.add(f"step {step}", TableRows(columns, (
            _sparse_row("quotient", quotient),
            _row(_remainder_label(step), remainder, min(lows), hi),
            _divisor_row(divisor, shift),
        )))
    if step == 0:
        rec.note("no step", "dividend degree is below divisor degree")
    return quotient, remainder, rec.build()


def division_rows(trace: Trace) -> list[TableRow]:
    """The remainder rows of a division trace, in order."""
    return [
        row
        for table in trace.payloads(TableRows)
        for row in table.rows
        if row.label.endswith("Remainder")
    ]


# square root ---------------------------------------------------------------

def sqrt_poly(p: Polynomial, notation: Notation = "medieval") -> tuple[Polynomial, Trace]:
    """Square root by peeling off one root term at a time.

    The first term is the root of the highest term. Each further term A is
    the leading term of the remainder divided by twice the leading root term;
    2*A*(root so far) + A*A is then subtracted. Extraction succeeds when
    nothing remains. The root with a positive leading coefficient is returned.
    """
    if p.is_zero:
        raise ValueError("sqrt_poly needs a nonzero polynomial")
    rec = TraceRecorder("sqrt_poly")
    columns = ("term", "subtracted", "root", "remainder")
    show = lambda q: render_poly(q, notation)  # noqa: E731

    n = p.degree
    lead_root = exact_sqrt(p.leading_coefficient)
    if n % 2 or lead_root is None:
        raise NotPerfectSquare(
            f"highest term {show(p.leading_term())} has no rational square root", p
        )
    root = Polynomial._raw({n // 2: Quantity(lead_root)})
    square = root * root
    remainder = p - square
    rec.add("root of the highest term", TableRows(columns, (
        TableRow("R1", {
            "term": show(root), "subtracted": show(square),
            "root": show(root), "remainder": show(remainder),
        }),
    )))

    twice_lead = root.leading_coefficient * 2
    k = 1
    while remainder:
        last = root.low_degree
        e = remainder.degree - root.degree
        if e < 0 or e >= last:
            raise NotPerfectSquare(
                f"remainder {show(remainder)} cannot be cleared", remainder
            )
        k += 1
        term = Polynomial._raw({e: remainder.leading_coefficient / twice_lead})
        subtracted = term * root * 2 + term * term
        remainder = remainder - subtracted
        root = root + term
        rec.add(f"next term {show(term)}", TableRows(columns, (
            TableRow(f"R{k}", {
                "term": show(term), "subtracted": show(subtracted),
                "root": show(root), "remainder": show(remainder),
            }),
        )))
    rec.add("nothing remains", Note(f"root: {show(root)}"))
    return root, rec.build()


def sqrt_partials(trace: Trace) -> list[str]:
    """Successive partial roots recorded in a :func:`sqrt_poly` trace."""
    return [row.cells["root"] for t in trace.payloads(TableRows) for row in t.rows]
