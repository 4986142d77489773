"""Step traces: the boards and tables an algorithm passes through.

Algorithms return a :class:`Trace` as plain data; :func:`render_trace` turns
it into aligned text or schema-stable JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Literal, Mapping, Union

from .digitboard import DigitBoard, render_board
from .quantity import Quantity

__all__ = [
    "SCHEMA_VERSION",
    "Binding",
    "BoardSnapshot",
    "Note",
    "Step",
    "TableRow",
    "TableRows",
    "Trace",
    "TraceRecorder",
    "render_trace",
    "trace_from_json",
    "trace_to_json",
]

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class BoardSnapshot:
    """One multiplication stage.

    Columns are powers of ten: ``upper_column`` is where the units digit of
    the partial product sits, ``multiplier_column`` where the multiplier's
    units digit sits during the stage, ``next_column`` where it sits after
    being moved. ``before`` is the working line prior to the merge.
    """

    board: DigitBoard
    multiplier: DigitBoard
    multiplier_column: int
    next_column: int
    shift: int
    before: DigitBoard | None = None
    upper: DigitBoard | None = None
    upper_column: int = 0
    grown: int = 0


@dataclass(frozen=True)
class TableRow:
    label: str
    cells: Mapping[str, str]


@dataclass(frozen=True)
class TableRows:
    columns: tuple[str, ...]
    rows: tuple[TableRow, ...]


@dataclass(frozen=True)
class Binding:
    name: str
    value: Quantity


@dataclass(frozen=True)
class Note:
    text: str = ""


Payload = Union[BoardSnapshot, TableRows, Binding, Note]


@dataclass(frozen=True)
class Step:
    index: int
    label: str
    payload: Payload


@dataclass(frozen=True)
class Trace:
    algorithm: str
    steps: tuple[Step, ...] = ()

    def __post_init__(self) -> None:
        for expected, step in enumerate(self.steps, start=1):
            if step.index != expected:
                raise ValueError(f"step indices must run 1..n, got {step.index}")

    def __len__(self) -> int:
        return len(self.steps)

    def payloads(self, kind: type) -> list:
        return [s.payload for s in self.steps if isinstance(s.payload, kind)]

    def bindings(self) -> dict[str, Quantity]:
        """Last bound value for each name."""
        return {b.name: b.value for b in self.payloads(Binding)}


@dataclass
class TraceRecorder:
    algorithm: str
    _steps: list[Step] = field(default_factory=list)

    def add(self, label: str, payload: Payload | None = None) -> Step:
        step = Step(len(self._steps) + 1, label, payload if payload is not None else Note())
        self._steps.append(step)
        return step

    def note(self, label: str, text: str = "") -> Step:
        return self.add(label, Note(text))

    def bind(self, label: str, name: str, value: Quantity) -> Step:
        return self.add(label, Binding(name, value))

    def build(self) -> Trace:
        return Trace(self.algorithm, tuple(self._steps))


# text ---------------------------------------------------------------------

def _aligned(lines: list[tuple[str, int]]) -> list[str]:
    """Right-align strings so that each one's last character sits at its column."""
    width = max(len(text) + col for text, col in lines)
    return [(" " * (width - col - len(text)) + text).rstrip() for text, col in lines]


def _board_text(snap: BoardSnapshot) -> list[str]:
    out: list[str] = []
    mult = render_board(snap.multiplier, "ascii")
    if snap.upper is not None and snap.before is not None:
        out += _aligned([
            (render_board(snap.upper, "ascii"), snap.upper_column),
            (render_board(snap.before, "ascii"), 0),
            (mult, snap.multiplier_column),
        ])
        out.append("")
    out += _aligned([
        (render_board(snap.board, "ascii"), 0),
        (mult, snap.next_column),
    ])
    if snap.grown:
        out.append(f"(carry grew the board by {snap.grown} on the left)")
    return out


def _table_text(table: TableRows) -> list[str]:
    label_w = max([len(r.label) for r in table.rows] + [0])
    widths = [
        max([len(c)] + [len(r.cells.get(c, "")) for r in table.rows])
        for c in table.columns
    ]
    header = " " * label_w + "  " + "  ".join(
        c.rjust(w) for c, w in zip(table.columns, widths)
    )
    out = [header.rstrip()]
    for r in table.rows:
        line = r.label.ljust(label_w) + "  " + "  ".join(
            r.cells.get(c, "").rjust(w) for c, w in zip(table.columns, widths)
        )
        out.append(line.rstrip())
    return out


def _payload_text(payload: Payload) -> list[str]:
    if isinstance(payload, BoardSnapshot):
        return _board_text(payload)
    if isinstance(payload, TableRows):
        return _table_text(payload)
    if isinstance(payload, Binding):
        return [f"{payload.name} = {payload.value}"]
    return [payload.text] if payload.text else []


def _render_text(trace: Trace) -> str:
    out = [f"# {trace.algorithm}"]
    for step in trace.steps:
        body = _payload_text(step.payload)
        if not body:
            out.append(step.label)
            continue
        out.append(f"[{step.index}] {step.label}")
        out += ["    " + line if line else "" for line in body]
    return "\n".join(out) + "\n"


# structured ---------------------------------------------------------------

def _board_json(b: DigitBoard | None):
    return None if b is None else b.to_json()


def _payload_json(payload: Payload) -> dict:
    if isinstance(payload, BoardSnapshot):
        return {
            "kind": "board",
            "before": _board_json(payload.before),
            "upper": _board_json(payload.upper),
            "upper_column": payload.upper_column,
            "board": payload.board.to_json(),
            "multiplier": payload.multiplier.to_json(),
            "multiplier_column": payload.multiplier_column,
            "next_column": payload.next_column,
            "shift": payload.shift,
            "grown": payload.grown,
        }
    if isinstance(payload, TableRows):
        return {
            "kind": "table",
            "columns": list(payload.columns),
            "rows": [{"label": r.label, "cells": dict(r.cells)} for r in payload.rows],
        }
    if isinstance(payload, Binding):
        return {"kind": "binding", "name": payload.name, "value": payload.value.to_json()}
    return {"kind": "note", "text": payload.text}


def _payload_from_json(data: dict) -> Payload:
    kind = data["kind"]
    if kind == "board":
        opt = lambda v: None if v is None else DigitBoard.from_json(v)  # noqa: E731
        return BoardSnapshot(
            board=DigitBoard.from_json(data["board"]),
            multiplier=DigitBoard.from_json(data["multiplier"]),
            multiplier_column=data["multiplier_column"],
            next_column=data["next_column"],
            shift=data["shift"],
            before=opt(data["before"]),
            upper=opt(data["upper"]),
            upper_column=data["upper_column"],
            grown=data["grown"],
        )
    if kind == "table":
        return TableRows(
            tuple(data["columns"]),
            tuple(TableRow(r["label"], dict(r["cells"])) for r in data["rows"]),
        )
    if kind == "binding":
        return Binding(data["name"], Quantity.from_json(data["value"]))
    if kind == "note":
        return Note(data["text"])
    raise ValueError(f"unknown payload kind {kind!r}")


def trace_to_json(trace: Trace) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "algorithm": trace.algorithm,
        "steps": [
            {"index": s.index, "label": s.label, "payload": _payload_json(s.payload)}
            for s in trace.steps
        ],
    }


def trace_from_json(data: dict | str) -> Trace:
    if isinstance(data, str):
        data = json.loads(data)
    if data.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported trace schema {data.get('schema')!r}")
    steps = tuple(
        Step(s["index"], s["label"], _payload_from_json(s["payload"]))
        for s in data["steps"]
    )
    return Trace(data["algorithm"], steps)


def render_trace(trace: Trace, format: Literal["text", "structured"] = "text") -> str:
    if format == "text":
        return _render_text(trace)
    if format == "structured":
        return json.dumps(trace_to_json(trace), indent=2)
    raise ValueError(f"unknown trace format {format!r}")
