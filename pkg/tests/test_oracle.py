from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import polynomials
from dixit import oracle
from dixit.polynomial import DivisionByZeroPolynomial, Polynomial, parse_poly
from dixit.surd import SurdExpression, SurdSum, expand_square, parse_surd_expression


def test_mul_int_examples():
    assert oracle.oracle_mul_int(2326, 214) == 497764
    assert oracle.oracle_mul_int(98765, 0) == 0
    assert oracle.oracle_mul_int(12345, 6789) == 83810205
    with pytest.raises(ValueError):
        oracle.oracle_mul_int(-1, 2)


@given(st.integers(0, 10**30), st.integers(0, 10**30))
def test_mul_int_matches_python(a, b):
    assert oracle.oracle_mul_int(a, b) == a * b


def test_divmod_examples():
    q, r = oracle.oracle_poly_divmod(
        parse_poly("6x^8+28x^7+6x^6-80x^5+38x^4+92x^3-200x^2+20x"),
        parse_poly("2x^5+8x^4-20x^2"),
    )
    assert q == parse_poly("3x^3 + 2x^2 - 5x + 10")
    assert r == parse_poly("-2x^4 - 8x^3 + 20x")
    p = parse_poly("x^4 - 3x + 1")
    assert oracle.oracle_poly_divmod(p, parse_poly("1")) == (p, Polynomial())
    with pytest.raises(DivisionByZeroPolynomial):
        oracle.oracle_poly_divmod(p, Polynomial())


@given(polynomials(), polynomials(max_degree=5, min_terms=1), polynomials(max_degree=4))
def test_divmod_reconstruction(q, d, r_raw):
    r = Polynomial({k: c for k, c in r_raw.coefficients.items() if k < d.degree})
    assert oracle.oracle_poly_divmod(q * d + r, d) == (q, r)


@given(polynomials(), polynomials())
def test_ring_ops_match_library(p, q):
    assert oracle.oracle_poly_add(p, q) == p + q
    assert oracle.oracle_poly_sub(p, q) == p - q
    assert oracle.oracle_poly_mul(p, q) == p * q


def test_denest_search_examples():
    golden = parse_surd_expression("16 + s24 + s40 + s48 + s60 + s72 + s120")
    assert oracle.oracle_denest_search(golden, 10) == SurdSum([2, 3, 5, 6])
    assert oracle.oracle_denest_search(SurdExpression(2), 10) is None
    assert oracle.oracle_denest_search(expand_square(SurdSum([3, 7])), 10) == SurdSum([3, 7])


def test_expand_square_reference():
    assert oracle.oracle_expand_square([Fraction(2), Fraction(8)]) == (Fraction(18), ())


def test_oracle_does_not_import_algorithms():
    import ast
    import inspect

    tree = ast.parse(inspect.getsource(oracle))
    imported = {
        (node.module, alias.name)
        for node in ast.walk(tree) if isinstance(node, ast.ImportFrom)
        for alias in node.names
    }
    forbidden = {"multiply_indian", "duplicate_multiply", "divide_tabular", "sqrt_poly",
                 "denest", "expand_square", "mul", "add", "sub"}
    assert not {name for _, name in imported} & forbidden
