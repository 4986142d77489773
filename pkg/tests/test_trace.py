import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dixit.digitboard import parse_board
from dixit.medieval_arith import duplicate_multiply, multiply_indian
from dixit.polynomial import divide_tabular, parse_poly, sqrt_poly
from dixit.quantity import Quantity
from dixit.surd import denest, parse_surd_expression
from dixit.trace import (
    Note,
    Step,
    Trace,
    TraceRecorder,
    render_trace,
    trace_from_json,
    trace_to_json,
)

STAGE_ONE = """\
[1] stage 1: 2 x 214 = 428
    428
      2326
    214

    428326
     214"""


def golden_traces():
    yield multiply_indian(parse_board("2326"), parse_board("214"))[1]
    yield duplicate_multiply(parse_board("25"), parse_board("6"))[1]
    yield denest(parse_surd_expression("16 + s24 + s40 + s48 + s60 + s72 + s120"))[1]
    yield sqrt_poly(parse_poly("4dcc+12ddc+9cc+20dc+42dd+18c+25d+30r+9", "medieval"))[1]
    yield divide_tabular(
        parse_poly("6x^8+28x^7+6x^6-80x^5+38x^4+92x^3-200x^2+20x"),
        parse_poly("2x^5+8x^4-20x^2"),
    )[2]


def test_board_text_layout():
    text = render_trace(multiply_indian(parse_board("2326"), parse_board("214"))[1])
    assert text.startswith("# multiply_indian\n")
    assert STAGE_ONE in text


def test_division_header():
    trace = list(golden_traces())[-1]
    text = render_trace(trace)
    header = text.splitlines()[2].split()
    assert header == "dcc ddc cc dc dd c d r units".split()


def test_empty_note_prints_label_verbatim():
    rec = TraceRecorder("demo")
    rec.note("And nothing remains")
    rec.bind("solve", "r", Quantity(3))
    assert render_trace(rec.build()) == "# demo\nAnd nothing remains\n[2] solve\n    r = 3\n"


def test_indices_must_be_contiguous():
    with pytest.raises(ValueError):
        Trace("x", (Step(2, "late", Note()),))


@pytest.mark.parametrize("trace", list(golden_traces()), ids=lambda t: t.algorithm)
def test_structured_round_trip(trace):
    text = render_trace(trace, "structured")
    data = json.loads(text)
    assert data["schema"] == "1"
    assert trace_from_json(text) == trace
    assert trace_from_json(trace_to_json(trace)) == trace


@pytest.mark.parametrize("trace", list(golden_traces()), ids=lambda t: t.algorithm)
def test_rendering_is_deterministic(trace):
    rebuilt = trace_from_json(trace_to_json(trace))
    for fmt in ("text", "structured"):
        assert render_trace(trace, fmt) == render_trace(rebuilt, fmt)


def test_unknown_schema_rejected():
    data = trace_to_json(list(golden_traces())[0])
    data["schema"] = "2"
    with pytest.raises(ValueError):
        trace_from_json(data)


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_random_multiplication_traces_round_trip(a, b):
    trace = multiply_indian(parse_board(str(a)), parse_board(str(b)))[1]
    assert trace_from_json(json.loads(render_trace(trace, "structured"))) == trace
