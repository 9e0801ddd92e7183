"""Serialization of report objects to delimited text and JSON.

Output is deterministic for a fixed configuration: no timestamps or
wall-clock fields are written, floats are rendered with 17 significant
digits, rationals as p/q, and symbolic forms carry a companion value
column.  JSON files end in a newline and sort their keys.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import fields
from fractions import Fraction

from . import __version__
from .correlation import DeltaReport, HLReport, TrendPoint
from .logforms import LogForm

SKIP_FIELDS = {"elapsed"}  # wall time stays out of serialized output


def fmt_float(v: float) -> str:
    return f"{float(v):.17g}"


def csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return fmt_float(v)
    if isinstance(v, (int, Fraction)):
        return str(v)
    return str(v)


def _expand(name: str, v) -> list[tuple[str, str]]:
    """One value to its CSV columns; symbolic forms get an eval column."""
    if isinstance(v, LogForm):
        return [(name, str(v)), (name + "_eval", fmt_float(v.evaluate()))]
    return [(name, csv_cell(v))]


def dataclass_row(obj) -> tuple[list[str], list[str]]:
    header: list[str] = []
    cells: list[str] = []
    for f in fields(obj):
        if f.name in SKIP_FIELDS:
            continue
        for h, c in _expand(f.name, getattr(obj, f.name)):
            header.append(h)
            cells.append(c)
    return header, cells


def delta_report_table(rep: DeltaReport) -> tuple[list[str], list[list[str]]]:
    header, cells = dataclass_row(rep)
    return header, [cells]


def trend_table(points: list[TrendPoint]) -> tuple[list[str], list[list[str]]]:
    if not points:
        return ["N", "h", "delta", "delta_over_N"], []
    header = None
    rows = []
    for p in points:
        h, cells = dataclass_row(p)
        header = header or h
        rows.append(cells)
    return header, rows


def hl_table(rep: HLReport) -> tuple[list[str], list[list[str]]]:
    header, cells = dataclass_row(rep)
    return header, [cells]


def delange_table(values: list[float]) -> tuple[list[str], list[list[str]]]:
    return (["M", "partial_sum"],
            [[str(m), fmt_float(v)] for m, v in enumerate(values, start=1)])


def write_csv(path: str, header: list[str], rows: list[list[str]]) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    with open(path, "w", newline="") as f:
        f.write(buf.getvalue())


# -- JSON ------------------------------------------------------------


def json_value(v):
    if isinstance(v, LogForm):
        return {"form": str(v), "value": v.evaluate()}
    if isinstance(v, Fraction):
        return str(v)
    return v


def dataclass_json(obj) -> dict:
    return {f.name: json_value(getattr(obj, f.name))
            for f in fields(obj) if f.name not in SKIP_FIELDS}


def report_payload(kind: str, data, config: dict) -> dict:
    if isinstance(data, list):
        body = [dataclass_json(x) if hasattr(x, "__dataclass_fields__")
                else x for x in data]
    elif hasattr(data, "__dataclass_fields__"):
        body = dataclass_json(data)
    else:
        body = data
    cfg = {k: json_value(v) for k, v in config.items()}
    return {"kind": kind, "meta": {"config": cfg, "version": __version__},
            "data": body}


def write_json(path: str, payload: dict) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    with open(path, "w") as f:
        f.write(text)
