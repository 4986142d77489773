from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import polynomials
from dixit.oracle import oracle_poly_divmod, oracle_poly_mul
from dixit.polynomial import (
    DegreeName,
    DivisionByZeroPolynomial,
    NotPerfectSquare,
    Polynomial,
    PolynomialSyntaxError,
    UnknownLetter,
    degree_name,
    divide_tabular,
    division_rows,
    name_exponent,
    parse_poly,
    render_poly,
    sqrt_partials,
    sqrt_poly,
)
from dixit.quantity import Quantity

AGGREGATE = "4dcc+12ddc+9cc+20dc+42dd+18c+25d+30r+9"
DIVIDEND = "6x^8+28x^7+6x^6-80x^5+38x^4+92x^3-200x^2+20x"
DIVISOR = "2x^5+8x^4-20x^2"


def P(mapping):
    return Polynomial({d: Quantity(c) for d, c in mapping.items()})


def test_parse_examples():
    assert parse_poly(AGGREGATE, "medieval") == P(
        {8: 4, 7: 12, 6: 9, 5: 20, 4: 42, 3: 18, 2: 25, 1: 30, 0: 9}
    )
    assert parse_poly("x") == P({1: 1})
    assert parse_poly("dcd", "medieval") == parse_poly("ddc", "medieval") == P({7: 1})
    assert parse_poly("3x^2 + 2x^2 - x") == P({2: 5, 1: -1})
    assert parse_poly("(1/2)x^3 - 4") == P({3: Fraction(1, 2), 0: -4})
    assert parse_poly("5 units + r", "medieval") == P({0: 5, 1: 1})


def test_parse_errors_carry_positions():
    with pytest.raises(UnknownLetter) as info:
        parse_poly("4dq", "medieval")
    assert info.value.position == 2
    with pytest.raises(PolynomialSyntaxError):
        parse_poly("")
    with pytest.raises(PolynomialSyntaxError):
        parse_poly("3x^")
    with pytest.raises(PolynomialSyntaxError):
        parse_poly("2 ++ x")


def test_render_examples():
    assert render_poly(P({4: 2, 3: 3, 1: 5, 0: 3}), "medieval") == "2dd + 3c + 5r + 3"
    assert render_poly(Polynomial()) == "0"
    assert render_poly(P({5: 2, 4: 8, 2: -20})) == "2x^5 + 8x^4 - 20x^2"
    assert render_poly(P({0: -1, 1: -1})) == "-x - 1"


def test_degree_names():
    header = "dcc ddc cc dc dd c d r units".split()
    assert [degree_name(n) for n in range(8, -1, -1)] == header
    assert name_exponent("dcc") == 8
    assert DegreeName("cdd").exponent == 7


def test_exponent_is_letter_weight_sum_for_short_names():
    weights = {"r": 1, "d": 2, "c": 3}
    for length in range(1, 6):
        for letters in product("rdc", repeat=length):
            name = "".join(letters)
            assert name_exponent(name) == sum(weights[ch] for ch in name)


def test_ring_operations():
    a = parse_poly("2dd+3c+5r+3", "medieval")
    assert a * a == parse_poly(AGGREGATE, "medieval")
    assert parse_poly("x-1") * parse_poly("x+1") == parse_poly("x^2 - 1")
    assert a + Polynomial() == a
    assert a - a == Polynomial()
    assert (a - a).degree is None


def test_no_stored_nothing_coefficients():
    p = Polynomial({3: Quantity(0), 1: Quantity(2)})
    assert p.coefficients == {1: Quantity(2)}


def test_golden_division():
    q, r, trace = divide_tabular(parse_poly(DIVIDEND), parse_poly(DIVISOR))
    assert render_poly(q) == "3x^3 + 2x^2 - 5x + 10"
    assert render_poly(r) == "-2x^4 - 8x^3 + 20x"
    labels = [row.label for row in division_rows(trace)]
    assert labels == ["First Remainder", "Second Remainder", "Third Remainder", "Fourth Remainder"]


def test_golden_division_remainder_rows_are_exact():
    # frozen from oracle_poly_divmod applied one quotient term at a time
    _, _, trace = divide_tabular(parse_poly(DIVIDEND), parse_poly(DIVISOR))
    rows = [[c for c in row.cells.values()] for row in division_rows(trace)]
    assert rows == [
        ["0", "4", "6", "-20", "38", "92", "-200", "20"],
        ["0", "-10", "-20", "78", "92", "-200", "20"],
        ["0", "20", "78", "-8", "-200", "20"],
        ["0", "-2", "-8", "0", "20"],
    ]


def test_division_rows_match_oracle_partial_remainders():
    dividend, divisor = parse_poly(DIVIDEND), parse_poly(DIVISOR)
    q, _, trace = divide_tabular(dividend, divisor)
    partial = Polynomial()
    for (d, c), row in zip(q.terms(), division_rows(trace)):
        partial = partial + Polynomial({d: c})
        expected = dividend - oracle_poly_mul(partial, divisor)
        for name, cell in row.cells.items():
            assert Quantity(cell) == expected.coefficient(name_exponent(name))


def test_division_edge_cases():
    p = parse_poly("x^3 - 2x + 7")
    assert divide_tabular(p, p)[:2] == (P({0: 1}), Polynomial())
    assert divide_tabular(p, P({0: 1}))[:2] == (p, Polynomial())
    q, r, trace = divide_tabular(P({1: 1}), p)
    assert (q, r) == (Polynomial(), P({1: 1}))
    assert trace.steps[-1].label == "no step"
    with pytest.raises(DivisionByZeroPolynomial):
        divide_tabular(p, Polynomial())


@given(polynomials(), polynomials(max_degree=5, min_terms=1), polynomials(max_degree=8))
def test_division_reconstruction(q, d, r_raw):
    r = Polynomial({k: c for k, c in r_raw.coefficients.items() if k < d.degree})
    n = q * d + r
    got_q, got_r, trace = divide_tabular(n, d)
    assert (got_q, got_r) == (q, r)
    assert (got_q, got_r) == oracle_poly_divmod(n, d)
    assert len(division_rows(trace)) == len(got_q.coefficients)


def test_golden_sqrt():
    root, trace = sqrt_poly(parse_poly(AGGREGATE, "medieval"))
    assert render_poly(root, "medieval") == "2dd + 3c + 5r + 3"
    assert sqrt_partials(trace) == ["2dd", "2dd + 3c", "2dd + 3c + 5r", "2dd + 3c + 5r + 3"]
    rows = [t.rows[0] for t in trace.payloads(type(trace.steps[0].payload))]
    assert [r.cells["remainder"] for r in rows] == [
        "12ddc + 9cc + 20dc + 42dd + 18c + 25d + 30r + 9",
        "20dc + 42dd + 18c + 25d + 30r + 9",
        "12dd + 18c + 30r + 9",
        "0",
    ]
    assert rows[2].cells["subtracted"] == "20dc + 30dd + 25d"


def test_sqrt_small_cases():
    assert sqrt_poly(P({2: 1}))[0] == P({1: 1})
    assert sqrt_poly(P({2: 1, 1: -2, 0: 1}))[0] == P({1: 1, 0: -1})
    assert sqrt_poly(P({0: Fraction(9, 4)}))[0] == P({0: Fraction(3, 2)})


@pytest.mark.parametrize("text", ["x^3", "2x^2", "x^2 + 1", "-x^2", "x^4 + x"])
def test_not_perfect_square(text):
    with pytest.raises(NotPerfectSquare) as info:
        sqrt_poly(parse_poly(text))
    assert isinstance(info.value.remainder, Polynomial)


@given(polynomials(max_degree=6, min_terms=1, max_terms=5))
def test_sqrt_round_trip(s):
    root, _ = sqrt_poly(s * s)
    assert root in (s, -s)


@given(polynomials(max_degree=6, min_terms=1, max_terms=5))
def test_sqrt_rejects_square_plus_one(s):
    # s*s + 1 is a square only when s is constant
    target = s * s + P({0: 1})
    if s.degree == 0:
        return
    with pytest.raises(NotPerfectSquare):
        sqrt_poly(target)


@given(polynomials(max_degree=12, max_terms=8), st.sampled_from(["modern", "medieval"]))
def test_notation_round_trip(p, notation):
    text = render_poly(p, notation)
    assert parse_poly(text, notation) == p


@given(polynomials())
def test_json_round_trip(p):
    assert Polynomial.from_json(p.to_json()) == p
