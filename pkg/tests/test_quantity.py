from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import nonzero_quantities, quantities
from dixit.oracle import signed
from dixit.quantity import (
    NOTHING,
    Comparison,
    DivisionByNothing,
    NotDeficient,
    ParityKind,
    Polarity,
    Quantity,
    add,
    classify_parity,
    deficiency_compare,
    div,
    exact_sqrt,
    modern_compare,
    mul,
    sub,
)

aug, dfc = Quantity.augmented, Quantity.deficient


def test_sign_rule_examples():
    assert mul(dfc(5), dfc(1)) == aug(5)
    assert mul(aug(2) / 3, aug(3) / 2) == aug(1)
    assert mul(aug(7), NOTHING).is_nothing
    assert mul(dfc(3), aug(2)) == dfc(6)


def test_division_examples():
    assert div(dfc(6), aug(2)) == dfc(3)
    assert div(NOTHING, aug(7)) == NOTHING
    assert div(aug(24), dfc(4)) == dfc(6)
    with pytest.raises(DivisionByNothing):
        div(aug(1), NOTHING)


def test_add_sub_examples():
    assert add(aug(3), dfc(5)) == dfc(2)
    assert sub(dfc(2), dfc(2)).polarity is Polarity.NOTHING
    assert add(Quantity("1/3"), Quantity("1/6")) == Quantity("1/2")


def test_deficiency_compare_examples():
    assert deficiency_compare(dfc(5), dfc(1)) is Comparison.FIRST_GREATER
    assert deficiency_compare(dfc(3), dfc(3)) is Comparison.EQUAL
    assert deficiency_compare(dfc(Fraction(1, 2)), dfc(2)) is Comparison.SECOND_GREATER
    assert modern_compare(dfc(5), dfc(1)) is Comparison.SECOND_GREATER
    for bad in (aug(1), NOTHING):
        with pytest.raises(NotDeficient):
            deficiency_compare(bad, dfc(1))
        with pytest.raises(NotDeficient):
            deficiency_compare(dfc(1), bad)


def test_construction_and_views():
    q = Quantity(Fraction(-6, 4))
    assert (q.numerator, q.denominator) == (-3, 2)
    assert q.polarity is Polarity.DEFICIENT
    assert q.magnitude == Fraction(3, 2)
    assert Quantity(0).polarity is Polarity.NOTHING
    assert str(NOTHING) == "nothing"
    with pytest.raises(TypeError):
        Quantity(0.5)
    with pytest.raises(ValueError):
        Quantity.deficient(0)


def test_json_shape():
    assert dfc(Fraction(3, 4)).to_json() == {"num": -3, "den": 4, "polarity": "deficient"}
    assert NOTHING.to_json()["polarity"] == "nothing"


@given(quantities)
def test_json_round_trip(q):
    assert Quantity.from_json(q.to_json()) == q


@given(quantities)
def test_invariants(q):
    from math import gcd
    assert q.denominator > 0
    assert gcd(abs(q.numerator), q.denominator) == 1
    assert (q.polarity is Polarity.NOTHING) == (q.numerator == 0)
    if not q.is_nothing:
        assert q.magnitude > 0


@given(quantities, quantities)
def test_ops_match_signed_rationals(a, b):
    x, y = signed(a), signed(b)
    assert signed(mul(a, b)) == x * y
    assert signed(add(a, b)) == x + y
    assert signed(sub(a, b)) == x - y


@given(quantities, nonzero_quantities)
def test_division_inverts_multiplication(a, b):
    assert mul(div(a, b), b) == a


@given(nonzero_quantities.filter(lambda q: q.is_deficient),
       nonzero_quantities.filter(lambda q: q.is_deficient))
def test_deficiency_order_is_magnitude_order(a, b):
    got = deficiency_compare(a, b)
    if a.magnitude > b.magnitude:
        assert got is Comparison.FIRST_GREATER
    elif a.magnitude < b.magnitude:
        assert got is Comparison.SECOND_GREATER
    else:
        assert got is Comparison.EQUAL


def test_parity_examples():
    assert classify_parity(1) is ParityKind.UNIT
    assert classify_parity(9) is ParityKind.ODD
    assert classify_parity(8) is ParityKind.EVENLY_EVEN
    assert classify_parity(6) is ParityKind.EVENLY_ODD
    assert classify_parity(12) is ParityKind.ODDLY_EVEN
    with pytest.raises(ValueError):
        classify_parity(0)


def _reference_kind(n: int) -> ParityKind:
    k, odd = 0, n
    while odd % 2 == 0:
        k, odd = k + 1, odd // 2
    if n == 1:
        return ParityKind.UNIT
    if k == 0:
        return ParityKind.ODD
    if odd == 1:
        return ParityKind.EVENLY_EVEN
    return ParityKind.EVENLY_ODD if k == 1 else ParityKind.ODDLY_EVEN


def test_parity_partitions_first_ten_thousand():
    seen = {kind: 0 for kind in ParityKind}
    for n in range(1, 10_001):
        kind = classify_parity(n)
        assert kind is _reference_kind(n)
        seen[kind] += 1
    assert sum(seen.values()) == 10_000
    assert seen[ParityKind.EVENLY_EVEN] == 13  # 2 .. 8192


@given(st.fractions(min_value=0, max_value=1000, max_denominator=50))
def test_exact_sqrt_of_squares(f):
    assert exact_sqrt(f * f) == f
