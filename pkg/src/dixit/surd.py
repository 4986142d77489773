"""Sums of square roots and the denesting of sqrt(N + sqrt(a1) + ... ).

Squaring sqrt(m1) + ... + sqrt(mk) gives the rational part m1 + ... + mk and
one surd 2*sqrt(mi*mj) = sqrt(4*mi*mj) per pair. :func:`denest` runs that
backwards. It first tries the classical assignment, where the smallest
surds all pair the smallest term with the others and the second term is
taken as the unknown "thing", and then falls back to an exhaustive search.
Every returned root is checked by squaring it again.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .quantity import NOTHING, Quantity, QuantityLike, exact_sqrt
from .trace import Trace, TraceRecorder

__all__ = [
    "AmbiguousTermCount",
    "NoSurds",
    "NotDenestable",
    "SurdExpression",
    "SurdSum",
    "SurdSyntaxError",
    "denest",
    "expand_square",
    "parse_surd_expression",
    "parse_surd_sum",
]

MAX_TERMS = 5


class NotDenestable(ValueError):
    pass


class AmbiguousTermCount(NotDenestable):
    pass


class SurdSyntaxError(ValueError):
    def __init__(self, message: str, position: int = 0) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NoSurds(SurdSyntaxError):
    """The expression has no irrational part left once square radicands fold."""


def _q(value: QuantityLike) -> Quantity:
    return value if isinstance(value, Quantity) else Quantity(value)


@dataclass(frozen=True)
class SurdExpression:
    """rational + sqrt(a1) + sqrt(a2) + ... with radicands sorted ascending.

    Radicands that are squares of rationals are folded into ``rational`` when
    the expression is built, so ``9 + s16`` becomes ``13``.
    """

    rational: Quantity
    surds: tuple[Quantity, ...]

    def __init__(self, rational: QuantityLike = NOTHING, surds: Iterable[QuantityLike] = ()) -> None:
        total = _q(rational).value
        if total < 0:
            raise ValueError("the rational part must not be deficient")
        kept: list[Fraction] = []
        for a in surds:
            f = _q(a).value
            if f <= 0:
                raise ValueError(f"radicand {f} is not positive")
            root = exact_sqrt(f)
            if root is None:
                kept.append(f)
            else:
                total += root
        object.__setattr__(self, "rational", Quantity(total))
        object.__setattr__(self, "surds", tuple(Quantity(f) for f in sorted(kept)))

    def to_json(self) -> dict:
        return {"rational": self.rational.to_json(), "surds": [a.to_json() for a in self.surds]}

    @classmethod
    def from_json(cls, data: dict) -> SurdExpression:
        return cls(Quantity.from_json(data["rational"]), [Quantity.from_json(a) for a in data["surds"]])

    def __str__(self) -> str:
        parts = [_surd_text(a) for a in self.surds]
        if self.rational or not parts:
            parts.insert(0, self.rational.plain())
        return " + ".join(parts)


@dataclass(frozen=True)
class SurdSum:
    """sqrt(m1) + sqrt(m2) + ... with the radicands sorted ascending."""

    terms: tuple[Quantity, ...]

    def __init__(self, terms: Iterable[QuantityLike]) -> None:
        qs = sorted((_q(t) for t in terms), key=lambda q: q.value)
        if not qs:
            raise ValueError("a surd sum needs at least one term")
        if qs[0].value <= 0:
            raise ValueError("surd sum terms must be positive")
        object.__setattr__(self, "terms", tuple(qs))

    def to_json(self) -> dict:
        return {"terms": [t.to_json() for t in self.terms]}

    @classmethod
    def from_json(cls, data: dict) -> SurdSum:
        return cls(Quantity.from_json(t) for t in data["terms"])

    def __str__(self) -> str:
        return " + ".join(_surd_text(t) for t in self.terms)


def _surd_text(a: Quantity) -> str:
    return f"s{a.plain()}" if a.is_integer else f"s({a.plain()})"


def expand_square(s: SurdSum) -> SurdExpression:
    """(sqrt(m1) + ... + sqrt(mk))**2.

    Cross terms whose product is a square fold into the rational part.
    """
    ms = [t.value for t in s.terms]
    cross = [4 * x * y for x, y in combinations(ms, 2)]
    return SurdExpression(Quantity(sum(ms, Fraction(0))), cross)


# text ---------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<surd>s\s*(?:\(\s*(?P<pnum>\d+(?:\s*/\s*\d+)?)\s*\)|(?P<num>\d+(?:/\d+)?)))|(?P<rat>\d+(?:/\d+)?))\s*")


def _fraction(text: str, pos: int) -> Fraction:
    text = re.sub(r"\s+", "", text)
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise SurdSyntaxError("zero denominator", pos)
    return Fraction(int(num), int(den or 1))


def _parse_terms(text: str) -> list[tuple[str, Fraction, int]]:
    """(kind, value, position) per term."""
    if not text.strip():
        raise SurdSyntaxError("empty expression", 0)
    pos = 0
    out: list[tuple[str, Fraction, int]] = []
    while True:
        m = _TOKEN.match(text, pos)
        start = len(text) - len(text[pos:].lstrip())
        if not m:
            raise SurdSyntaxError("expected a number or sN", start)
        if m.group("surd"):
            out.append(("surd", _fraction(m.group("pnum") or m.group("num"), start), start))
        else:
            out.append(("rational", _fraction(m.group("rat"), start), start))
        pos = m.end()
        if pos == len(text):
            return out
        if text[pos] != "+":
            raise SurdSyntaxError(f"expected '+', got {text[pos]!r}", pos)
        pos += 1


def parse_surd_expression(text: str, *, require_surd: bool = False) -> SurdExpression:
    """Read ``16 + s24 + s40``; ``sN`` is sqrt(N), ``s(3/2)`` a fractional radicand.

    With ``require_surd`` an expression that folds to a plain rational is
    rejected with :class:`NoSurds`.
    """
    terms = _parse_terms(text)
    rational = sum((v for kind, v, _ in terms if kind == "rational"), Fraction(0))
    surds = []
    for kind, v, at in terms:
        if kind != "surd":
            continue
        if v <= 0:
            raise SurdSyntaxError("radicands must be positive", at)
        surds.append(v)
    e = SurdExpression(Quantity(rational), surds)
    if require_surd and not e.surds:
        root = exact_sqrt(e.rational.value)
        hint = (
            f"its square root is the rational {root}"
            if root is not None
            else f"its square root is s{e.rational.plain()}"
        )
        raise NoSurds(f"{text.strip()!r} folds to the plain number {e.rational.plain()}; {hint}", 0)
    return e


def parse_surd_sum(text: str) -> SurdSum:
    terms = _parse_terms(text)
    for kind, _, at in terms:
        if kind != "surd":
            raise SurdSyntaxError("a surd sum has only sN terms", at)
    return SurdSum(v for _, v, _ in terms)


# denesting ----------------------------------------------------------------

def _pairs(k: int) -> int:
    return k * (k - 1) // 2


def _r_text(c: Fraction) -> str:
    num = "" if c.numerator == 1 else str(c.numerator)
    return f"{num}r" + (f"/{c.denominator}" if c.denominator != 1 else "")


_NAMES = {3: "mnp", 4: "mnpq", 5: "mnpqs"}


def _historical(n: Fraction, a: list[Fraction], k: int, rec: TraceRecorder) -> tuple[Fraction, ...] | None:
    """The classical assignment, recorded step by step.

    a[0..k-2] are taken as 4*m1*mj for j = 2..k and a[k-1] as 4*m2*m3. The
    second term is the thing r; the rest follow as multiples of r and the
    rational part fixes r.
    """
    names = _NAMES[k]
    fmt = lambda f: str(f)  # noqa: E731
    for j in range(1, k):
        rec.note("assign", f"{fmt(a[j - 1])} = 4{names[0]}{names[j]}")
    rec.note("assign", f"{fmt(a[k - 1])} = 4{names[1]}{names[2]}")
    rec.note("the thing", f"{names[1]} = r")
    rec.note("ratio", f"4{names[0]} = {fmt(a[0])}/r")
    coeffs = [Fraction(0)] * k
    coeffs[1] = Fraction(1)
    for j in range(2, k):
        coeffs[j] = a[j - 1] / a[0]
        rec.note("ratio", f"{names[j]} = {_r_text(coeffs[j])}")
    coeffs[0] = coeffs[2] * a[0] / a[k - 1]
    rec.note("ratio", f"{names[0]} = {_r_text(coeffs[0])}")
    total = sum(coeffs, Fraction(0))
    lhs = " + ".join(_r_text(c) for c in coeffs)
    rec.note("sum", f"{lhs} = {fmt(n)}")
    scale = math.lcm(total.denominator, n.denominator)
    rec.note("sum", f"{_r_text(total * scale)} = {fmt(n * scale)}")
    r = n / total
    rec.bind("solve", "r", Quantity(r))
    if r <= 0:
        return None
    terms = tuple(c * r for c in coeffs)
    for name, t in zip(names, terms):
        rec.bind("term", name, Quantity(t))
    return tuple(sorted(terms))


def _candidates(n: Fraction, a: list[Fraction]) -> list[Fraction]:
    """Values that any term of a root must take.

    With three or more square classes every term m_i closes a triangle of
    surds: (4 m_i m_j)(4 m_i m_l) / (4 m_j m_l) = 4 m_i**2. With two classes
    the class sums X, Y solve z**2 - n z + W/4 = 0 with W the square of the
    sum of all surds, and individual terms split X or Y by a surd ratio.
    """
    base: set[Fraction] = set()
    distinct = sorted(set(a))
    counts = Counter(a)
    for i, x in enumerate(distinct):
        for y in distinct[i:]:
            if x == y and counts[x] < 2:
                continue
            xy = x * y
            for z in distinct:
                need = 1 + (z == x) + (z == y)
                if counts[z] < need:
                    continue
                root = exact_sqrt(xy / z)
                if root is not None:
                    base.add(root / 2)

    cross = [exact_sqrt(x * y) for x, y in combinations(a, 2)]
    if all(c is not None for c in cross):
        w = sum(a, Fraction(0)) + 2 * sum(cross, Fraction(0))
        disc = exact_sqrt(n * n - w) if n * n >= w else None
        if disc is not None:
            sums = [z for z in ((n + disc) / 2, (n - disc) / 2) if z > 0]
            split = set(sums)
            for x in distinct:
                for y in distinct:
                    t = exact_sqrt(x / y)
                    if t is None:
                        continue
                    for z in sums:
                        split.add(z / (1 + t) ** 2)
                        split.add(z * t * t / (1 + t) ** 2)
            # the other class follows from any surd and a term of this one
            base |= split
            base.update(x / (4 * c) for c in split for x in distinct)
    return sorted(c for c in base if 0 < c <= n)


def _search(n: Fraction, a: list[Fraction], k: int, cands: list[Fraction]) -> list[tuple[Fraction, ...]]:
    """All non-decreasing k-tuples of candidates whose square is n + surds(a)."""
    surd_ids = {v: i for i, v in enumerate(sorted(set(a)))}
    need = [0] * len(surd_ids)
    for v in a:
        need[surd_ids[v]] += 1
    # integer arithmetic in units of 1/scale keeps the inner loop fast
    scale = math.lcm(n.denominator, *(c.denominator for c in cands))
    units = [int(c * scale) for c in cands]
    # pair(i, j): ("fold", 2*sqrt(mi*mj) in units), ("surd", id of 4*mi*mj) or None
    cache: dict[tuple[int, int], tuple | None] = {}

    def pair(i: int, j: int) -> tuple | None:
        key = (i, j) if i <= j else (j, i)
        if key not in cache:
            prod = 4 * cands[i] * cands[j]
            root = exact_sqrt(prod)
            if root is not None:
                cache[key] = ("fold", int(root * scale))
            elif prod in surd_ids:
                cache[key] = ("surd", surd_ids[prod])
            else:
                cache[key] = None
        return cache[key]

    left = [len(a)]
    found: list[tuple[Fraction, ...]] = []
    chosen: list[int] = []

    def extend(start: int, rest: int) -> None:
        depth = len(chosen)
        if depth == k:
            if rest == 0 and left[0] == 0:
                found.append(tuple(cands[i] for i in chosen))
            return
        future_pairs = _pairs(k) - _pairs(depth + 1)
        for idx in range(start, len(cands)):
            m = units[idx]
            if m * (k - depth) > rest:
                break
            new_rest = rest - m
            used: list[int] = []
            ok = True
            for p in chosen:
                info = pair(idx, p)
                if info is None:
                    ok = False
                    break
                if info[0] == "fold":
                    new_rest -= info[1]
                elif need[info[1]] > 0:
                    need[info[1]] -= 1
                    used.append(info[1])
                else:
                    ok = False
                    break
            if ok and new_rest >= 0 and left[0] - len(used) <= future_pairs:
                left[0] -= len(used)
                chosen.append(idx)
                extend(idx, new_rest)
                chosen.pop()
                left[0] += len(used)
            for u in used:
                need[u] += 1

    extend(0, int(n * scale))
    return found


def _show(terms: Iterable[Fraction]) -> str:
    return str(SurdSum(terms))


def denest(e: SurdExpression) -> tuple[SurdSum, Trace]:
    """Write sqrt(e) as a sum of simple surds.

    Raises :class:`NotDenestable` when no root verifies and
    :class:`AmbiguousTermCount` when there are more surds than a root of at
    most five terms could produce. If several roots verify, the smallest
    term tuple wins and the others are listed in the trace.
    """
    rec = TraceRecorder("denest")
    n = e.rational.value
    a = [q.value for q in e.surds]
    s = len(a)

    if s == 0:
        if n == 0:
            raise NotDenestable("nothing to take the root of")
        root = exact_sqrt(n)
        rec.note("no surds", f"the root is s{e.rational.plain()}"
                 + (f", the rational {root}" if root is not None else ""))
        result = SurdSum([n])
        _verify(result, e, rec)
        return result, rec.build()

    counts = [k for k in range(2, MAX_TERMS + 1) if _pairs(k) >= s]
    if not counts:
        raise AmbiguousTermCount(
            f"{s} surds exceed the {_pairs(MAX_TERMS)} pairs of a {MAX_TERMS}-term root"
        )
    rec.note("term count", f"{s} surds; trying roots of {', '.join(map(str, counts))} terms")

    solutions: list[tuple[Fraction, ...]] = []
    historical = None
    exact_k = next((k for k in counts if _pairs(k) == s), None)
    if exact_k is not None and exact_k >= 3:
        rec.note("historical path", f"{exact_k} terms in increasing order")
        historical = _historical(n, a, exact_k, rec)
        if historical is not None and _squares_to(historical, e):
            rec.note("historical path", f"verified: {_show(historical)}")
            solutions.append(historical)
        else:
            rec.note("historical path", "does not verify; matching surds to pairs exhaustively")
            historical = None

    cands = _candidates(n, a)
    for k in counts:
        found = _search(n, a, k, cands)
        if found:
            rec.note("search", f"{len(found)} root(s) with {k} terms")
            solutions.extend(t for t in found if t not in solutions)
            break
    if not solutions:
        raise NotDenestable(f"no sum of at most {MAX_TERMS} surds squares to {e}")

    solutions.sort()
    best = solutions[0]
    if len(solutions) > 1:
        rec.note("alternates", "; ".join(_show(t) for t in solutions[1:]))
    result = SurdSum(best)
    _verify(result, e, rec)
    return result, rec.build()


def _squares_to(terms: tuple[Fraction, ...], e: SurdExpression) -> bool:
    return expand_square(SurdSum(terms)) == e


def _verify(result: SurdSum, e: SurdExpression, rec: TraceRecorder) -> None:
    square = expand_square(result)
    if square != e:
        raise AssertionError(f"denest produced {result}, whose square is {square}, not {e}")
    rec.note("verify", f"({result})^2 = {square}")
