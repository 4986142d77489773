"""Exact rational quantities with augmented / deficient / nothing semantics.

A :class:`Quantity` is stored as a single signed, reduced rational. Its
*polarity* is a view over the sign: a positive value is ``augmented``, a
negative one ``deficient`` (a missing amount), and the empty value is
``nothing``, which is deliberately never called zero in this API.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

__all__ = [
    "Comparison",
    "DivisionByNothing",
    "NOTHING",
    "NotDeficient",
    "ParityKind",
    "Polarity",
    "Quantity",
    "add",
    "classify_parity",
    "deficiency_compare",
    "div",
    "exact_sqrt",
    "modern_compare",
    "mul",
    "sub",
]


class Polarity(enum.Enum):
    AUGMENTED = "augmented"
    DEFICIENT = "deficient"
    NOTHING = "nothing"


class Comparison(enum.Enum):
    FIRST_GREATER = "first-greater"
    SECOND_GREATER = "second-greater"
    EQUAL = "equal"


class ParityKind(enum.Enum):
    EVENLY_EVEN = "evenly-even"
    EVENLY_ODD = "evenly-odd"
    ODDLY_EVEN = "oddly-even"
    ODD = "odd"
    UNIT = "unit"


class DivisionByNothing(ZeroDivisionError):
    """Raised when the divisor is nothing."""


class NotDeficient(ValueError):
    """Raised when a deficiency comparison receives a non-deficient quantity."""


QuantityLike = Union["Quantity", int, Fraction, str]


def _as_fraction(value: QuantityLike) -> Fraction:
    if type(value) is Fraction:
        return value
    if isinstance(value, Quantity):
        return value.value
    if isinstance(value, bool):
        raise TypeError("bool is not a quantity")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot make a quantity from {type(value).__name__}")


@dataclass(frozen=True, slots=True)
class Quantity:
    """Immutable exact rational with a derived polarity.

    Accepts ints, :class:`~fractions.Fraction`, other quantities, or strings
    such as ``"3/4"``. Floats are refused on purpose.
    """

    value: Fraction

    def __init__(self, value: QuantityLike = 0) -> None:
        if isinstance(value, float):
            raise TypeError("floating-point values are not accepted")
        object.__setattr__(self, "value", _as_fraction(value))

    @classmethod
    def _of(cls, f: Fraction) -> Quantity:
        q = object.__new__(cls)
        object.__setattr__(q, "value", f)
        return q

    @classmethod
    def augmented(cls, magnitude: QuantityLike) -> Quantity:
        m = _as_fraction(magnitude)
        if m <= 0:
            raise ValueError("an augmented quantity needs a positive magnitude")
        return cls(m)

    @classmethod
    def deficient(cls, magnitude: QuantityLike) -> Quantity:
        m = _as_fraction(magnitude)
        if m <= 0:
            raise ValueError("a deficient quantity needs a positive magnitude")
        return cls(-m)

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    @property
    def polarity(self) -> Polarity:
        if self.value > 0:
            return Polarity.AUGMENTED
        if self.value < 0:
            return Polarity.DEFICIENT
        return Polarity.NOTHING

    @property
    def magnitude(self) -> Fraction:
        return abs(self.value)

    @property
    def is_nothing(self) -> bool:
        return self.value == 0

    @property
    def is_deficient(self) -> bool:
        return self.value < 0

    @property
    def is_integer(self) -> bool:
        return self.value.denominator == 1

    # arithmetic -----------------------------------------------------------

    def __add__(self, other: QuantityLike) -> Quantity:
        try:
            return Quantity._of(self.value + _as_fraction(other))
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: QuantityLike) -> Quantity:
        try:
            return Quantity._of(self.value - _as_fraction(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other: QuantityLike) -> Quantity:
        try:
            return Quantity._of(_as_fraction(other) - self.value)
        except TypeError:
            return NotImplemented

    def __mul__(self, other: QuantityLike) -> Quantity:
        try:
            return Quantity._of(self.value * _as_fraction(other))
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: QuantityLike) -> Quantity:
        try:
            d = _as_fraction(other)
        except TypeError:
            return NotImplemented
        if d == 0:
            raise DivisionByNothing("cannot divide by nothing")
        return Quantity._of(self.value / d)

    def __rtruediv__(self, other: QuantityLike) -> Quantity:
        if self.value == 0:
            raise DivisionByNothing("cannot divide by nothing")
        return Quantity._of(_as_fraction(other) / self.value)

    def __neg__(self) -> Quantity:
        return Quantity._of(-self.value)

    def __abs__(self) -> Quantity:
        return Quantity._of(abs(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    # modern (signed) order; the historical one is deficiency_compare
    def __eq__(self, other: object) -> bool:
        if isinstance(other, Quantity):
            return self.value == other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __lt__(self, other: QuantityLike) -> bool:
        return self.value < _as_fraction(other)

    def __le__(self, other: QuantityLike) -> bool:
        return self.value <= _as_fraction(other)

    def __gt__(self, other: QuantityLike) -> bool:
        return self.value > _as_fraction(other)

    def __ge__(self, other: QuantityLike) -> bool:
        return self.value >= _as_fraction(other)

    # presentation ---------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "num": self.numerator,
            "den": self.denominator,
            "polarity": self.polarity.value,
        }

    @classmethod
    def from_json(cls, data: dict) -> Quantity:
        q = cls(Fraction(int(data["num"]), int(data["den"])))
        if "polarity" in data and data["polarity"] != q.polarity.value:
            raise ValueError(f"polarity {data['polarity']!r} disagrees with {q}")
        return q

    def plain(self) -> str:
        """Signed numeral, e.g. ``-5`` or ``3/2``; nothing prints as ``0``."""
        return str(self.value)

    def describe(self) -> str:
        if self.is_nothing:
            return "nothing"
        return f"{self.polarity.value} {self.magnitude}"

    def __str__(self) -> str:
        return "nothing" if self.is_nothing else str(self.value)

    def __repr__(self) -> str:
        return f"Quantity({str(self.value)!r})"


NOTHING = Quantity(0)


def mul(a: Quantity, b: Quantity) -> Quantity:
    """Sign rule: like polarities give augmented, unlike give deficient."""
    if a.is_nothing or b.is_nothing:
        return NOTHING
    magnitude = a.magnitude * b.magnitude
    same = a.polarity is b.polarity
    return Quantity._of(magnitude if same else -magnitude)


def div(a: Quantity, b: Quantity) -> Quantity:
    if b.is_nothing:
        raise DivisionByNothing("cannot divide by nothing")
    if a.is_nothing:
        return NOTHING
    magnitude = a.magnitude / b.magnitude
    same = a.polarity is b.polarity
    return Quantity._of(magnitude if same else -magnitude)


def add(a: Quantity, b: Quantity) -> Quantity:
    return Quantity._of(a.value + b.value)


def sub(a: Quantity, b: Quantity) -> Quantity:
    return Quantity._of(a.value - b.value)


def _order(x: Fraction, y: Fraction) -> Comparison:
    if x > y:
        return Comparison.FIRST_GREATER
    if x < y:
        return Comparison.SECOND_GREATER
    return Comparison.EQUAL


def modern_compare(a: Quantity, b: Quantity) -> Comparison:
    """Signed order, in which deficient 1 exceeds deficient 5."""
    return _order(a.value, b.value)


def deficiency_compare(a: Quantity, b: Quantity) -> Comparison:
    """Order deficient quantities by how much is missing.

    Five missing is more of a deficiency than one missing, so
    ``deficient 5`` is the greater here, the reverse of :func:`modern_compare`.
    """
    for q in (a, b):
        if not q.is_deficient:
            raise NotDeficient(f"{q.describe()} is not deficient")
    return _order(a.magnitude, b.magnitude)


def classify_parity(n: int) -> ParityKind:
    """Nicomachean kind of a positive integer.

    evenly-even is a power of two (at least 2); evenly-odd is twice an odd
    number above one; oddly-even is 2**k times an odd number above one with
    k >= 2.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError("classify_parity needs an int")
    if n < 1:
        raise ValueError("classify_parity needs a positive integer")
    if n == 1:
        return ParityKind.UNIT
    twos = (n & -n).bit_length() - 1
    odd_part = n >> twos
    if twos == 0:
        return ParityKind.ODD
    if odd_part == 1:
        return ParityKind.EVENLY_EVEN
    if twos == 1:
        return ParityKind.EVENLY_ODD
    return ParityKind.ODDLY_EVEN


def exact_sqrt(value: QuantityLike) -> Fraction | None:
    """Rational square root of a non-negative rational, or None if irrational."""
    f = _as_fraction(value)
    if f < 0:
        return None
    num, den = f.numerator, f.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None
