"""Plain modern reference implementations used to cross-check results.

Nothing here calls into the algorithm modules; only their value types are
shared. These are deliberately naive.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .polynomial import DivisionByZeroPolynomial, Polynomial
from .quantity import Quantity
from .surd import SurdExpression, SurdSum

__all__ = [
    "oracle_denest_search",
    "oracle_expand_square",
    "oracle_mul_int",
    "oracle_poly_add",
    "oracle_poly_divmod",
    "oracle_poly_mul",
    "oracle_poly_sub",
    "signed",
]


def signed(q: Quantity) -> Fraction:
    """Deficient as negative, nothing as zero."""
    return Fraction(q.numerator, q.denominator)


def oracle_mul_int(a: int, b: int) -> int:
    """Schoolbook long multiplication on decimal digit lists."""
    if a < 0 or b < 0:
        raise ValueError("non-negative integers only")
    xs = [int(ch) for ch in reversed(str(a))]
    ys = [int(ch) for ch in reversed(str(b))]
    acc = [0] * (len(xs) + len(ys))
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            acc[i + j] += x * y
    carry = 0
    for i in range(len(acc)):
        carry, acc[i] = divmod(acc[i] + carry, 10)
    while carry:
        carry, d = divmod(carry, 10)
        acc.append(d)
    return int("".join(map(str, reversed(acc))))


def _dense(p: Polynomial) -> list[Fraction]:
    """Coefficients, lowest degree first."""
    if p.is_zero:
        return []
    out = [Fraction(0)] * (p.degree + 1)
    for d, c in p.coefficients.items():
        out[d] = signed(c)
    return out


def _from_dense(cs: list[Fraction]) -> Polynomial:
    return Polynomial({d: Quantity(c) for d, c in enumerate(cs) if c})


def oracle_poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = _dense(p), _dense(q)
    n = max(len(a), len(b))
    a += [Fraction(0)] * (n - len(a))
    b += [Fraction(0)] * (n - len(b))
    return _from_dense([x + y for x, y in zip(a, b)])


def oracle_poly_sub(p: Polynomial, q: Polynomial) -> Polynomial:
    return oracle_poly_add(p, _from_dense([-c for c in _dense(q)]))


def oracle_poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    a, b = _dense(p), _dense(q)
    if not a or not b:
        return Polynomial()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _from_dense(out)


def oracle_poly_divmod(n: Polynomial, d: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Synthetic division over dense coefficient arrays, top down."""
    den = _dense(d)
    if not den:
        raise DivisionByZeroPolynomial("division by the zero polynomial")
    num = _dense(n)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return Polynomial(), n
    q = [Fraction(0)] * (len(num) - dd)
    work = list(num)
    for i in reversed(range(len(q))):
        c = work[i + dd] / den[dd]
        q[i] = c
        for j in range(dd + 1):
            work[i + j] -= c * den[j]
    return _from_dense(q), _from_dense(work[:dd])


def _square_root(f: Fraction) -> Fraction | None:
    rn, rd = math.isqrt(f.numerator), math.isqrt(f.denominator)
    if rn * rn == f.numerator and rd * rd == f.denominator:
        return Fraction(rn, rd)
    return None


def oracle_expand_square(terms: list[Fraction]) -> tuple[Fraction, tuple[Fraction, ...]]:
    """(rational part, sorted surd radicands) of (sum of sqrt(t))**2."""
    rational = sum(terms, Fraction(0))
    surds: list[Fraction] = []
    for x, y in combinations(terms, 2):
        r = _square_root(x * y)
        if r is None:
            surds.append(4 * x * y)
        else:
            rational += 2 * r
    return rational, tuple(sorted(surds))


def oracle_denest_search(e: SurdExpression, bound: int, max_terms: int = 5) -> SurdSum | None:
    """Exhaustive search over integer roots with terms in 1..bound.

    Fewest terms first, then the smallest term tuple. None if nothing matches
    or the expression has no surds.
    """
    if not e.surds:
        return None
    target = (signed(e.rational), tuple(signed(a) for a in e.surds))
    total = target[0]
    for k in range(2, max_terms + 1):
        if k * (k - 1) // 2 < len(e.surds):
            continue
        for combo in combinations_with_replacement(range(1, bound + 1), k):
            if sum(combo) > total:
                continue
            if oracle_expand_square([Fraction(c) for c in combo]) == target:
                return SurdSum(combo)
    return None
