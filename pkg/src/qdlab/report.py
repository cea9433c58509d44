"""Campaign reports and their deterministic CSV/JSON serialization."""

from __future__ import annotations

import csv
import enum
import json
import math
import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np


class Status(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


@dataclass
class Assertion:
    name: str
    status: Status
    value: float | None = None
    threshold: float | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status.value, "value": self.value,
                "threshold": self.threshold, "detail": self.detail}


def check(name: str, ok: bool, value=None, threshold=None, detail: str = "") -> Assertion:
    return Assertion(name, Status.PASS if ok else Status.FAIL, value, threshold, detail)


def fit_check(name: str, fit, ok: bool, value=None, threshold=None, detail: str = "",
              min_r2: float = 0.95) -> Assertion:
    """Like :func:`check`, but a fit with ``R^2 < min_r2`` is never passed."""
    if fit.r_squared < min_r2:
        extra = f"R^2={fit.r_squared:.4f} < {min_r2}"
        return Assertion(name, Status.INCONCLUSIVE, value, threshold, f"{detail}; {extra}" if detail else extra)
    return check(name, ok, value, threshold, detail)


@dataclass
class Report:
    campaign: str
    columns: list
    rows: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    assertions: list = field(default_factory=list)
    config: dict = field(default_factory=dict)

    @property
    def status(self) -> Status:
        states = {a.status for a in self.assertions}
        if Status.FAIL in states:
            return Status.FAIL
        if Status.INCONCLUSIVE in states:
            return Status.INCONCLUSIVE
        return Status.PASS

    def add_row(self, *values) -> None:
        if len(values) != len(self.columns):
            raise ValueError(f"row has {len(values)} values, schema has {len(self.columns)}")
        self.rows.append(list(values))

    def to_dict(self, include_rows: bool = True) -> dict:
        out = {
            "campaign": self.campaign,
            "status": self.status.value,
            "summary": self.summary,
            "assertions": [a.to_dict() for a in self.assertions],
            "config": self.config,
            "columns": list(self.columns),
        }
        if include_rows:
            out["rows"] = self.rows
        return out


def _fmt_float(x: float) -> str:
    return format(x, ".17g")


def to_json(obj) -> str:
    """JSON text with sorted keys, 17 significant digits and null for non-finite floats."""
    if obj is None or obj is True or obj is False:
        return json.dumps(obj)
    if isinstance(obj, enum.Enum):
        return to_json(obj.value)
    if isinstance(obj, (bool, np.bool_)):
        return json.dumps(bool(obj))
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return _fmt_float(x) if math.isfinite(x) else "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = sorted((str(k), v) for k, v in obj.items())
        return "{" + ", ".join(f"{json.dumps(k)}: {to_json(v)}" for k, v in items) + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    if hasattr(obj, "to_dict"):
        return to_json(obj.to_dict())
    if hasattr(obj, "__dataclass_fields__"):
        return to_json({k: getattr(obj, k) for k in obj.__dataclass_fields__})
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _csv_cell(v):
    if isinstance(v, (float, np.floating)):
        return _fmt_float(float(v)) if math.isfinite(v) else ""
    if isinstance(v, enum.Enum):
        return v.value
    return v


def write_csv_stream(fh, columns, rows) -> None:
    w = csv.writer(fh, lineterminator="\r\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_csv_cell(v) for v in row])


def write_csv(path, columns, rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        write_csv_stream(fh, columns, rows)


def emit(report: Report, out_dir, fmt: str = "json") -> list:
    """Write the report; returns the written paths.

    ``csv`` writes the rows plus a JSON summary without rows; ``json`` writes
    one JSON document including the rows.
    """
    fmt = fmt.lower()
    if fmt not in ("csv", "json"):
        raise ValueError(f"unknown format {fmt!r}")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if not os.access(out, os.W_OK):
        raise PermissionError(f"output directory {out} is not writable")
    stem = report.campaign.lower()
    paths = []
    if fmt == "csv":
        p = out / f"{stem}.csv"
        write_csv(p, report.columns, report.rows)
        paths.append(p)
        p = out / f"{stem}_summary.json"
        p.write_text(to_json(report.to_dict(include_rows=False)) + "\n", encoding="utf-8")
        paths.append(p)
    else:
        p = out / f"{stem}.json"
        p.write_text(to_json(report.to_dict()) + "\n", encoding="utf-8")
        paths.append(p)
    return paths
