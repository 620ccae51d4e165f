"""CSV / JSON trajectory files.

CSV: header ``t,A,B,C,D,K_max,scalar[,mon:<name>...]``, floats written with
``repr`` (shortest round-trip form), and a trailing ``# {json}`` line holding
the config, termination and ``T_est``.  JSON: one object with ``config``,
``samples`` (rows in CSV column order), ``termination`` and optional ``T_est``.
"""
from __future__ import annotations

import io
import json
from dataclasses import dataclass
from typing import Optional, TextIO

import numpy as np

BASE_COLUMNS = ("t", "A", "B", "C", "D", "K_max", "scalar")


@dataclass(frozen=True)
class TrajectoryRecord:
    columns: tuple
    samples: np.ndarray          # (n, len(columns))
    termination: str
    T_est: Optional[float]
    config: dict

    @property
    def times(self) -> np.ndarray:
        return self.samples[:, 0]

    @property
    def metric(self) -> np.ndarray:
        return self.samples[:, 1:5]

    @property
    def monitors(self) -> dict:
        return {c[4:]: self.samples[:, i] for i, c in enumerate(self.columns) if c.startswith("mon:")}


def record_of(traj, config: Optional[dict] = None) -> TrajectoryRecord:
    return TrajectoryRecord(tuple(traj.columns), np.asarray(traj.samples), traj.termination,
                            traj.T_est, dict(config or {}))


def _fmt(x: float) -> str:
    return repr(float(x))


def write_csv(rec: TrajectoryRecord, out: TextIO) -> None:
    out.write(",".join(rec.columns) + "\n")
    for row in rec.samples:
        out.write(",".join(_fmt(v) for v in row) + "\n")
    footer = {"termination": rec.termination, "T_est": rec.T_est, "config": rec.config}
    out.write("# " + json.dumps(footer, sort_keys=True) + "\n")


def read_csv(src: TextIO) -> TrajectoryRecord:
    lines = [ln.rstrip("\n") for ln in src if ln.strip()]
    if not lines:
        raise ValueError("empty trajectory file")
    cols = tuple(lines[0].split(","))
    if cols[:len(BASE_COLUMNS)] != BASE_COLUMNS or any(
            not c.startswith("mon:") for c in cols[len(BASE_COLUMNS):]):
        raise ValueError(f"unexpected CSV header {lines[0]!r}")
    footer = {}
    rows = []
    for ln in lines[1:]:
        if ln.startswith("#"):
            footer = json.loads(ln[1:])
            continue
        rows.append([float(v) for v in ln.split(",")])
    samples = np.array(rows, dtype=float).reshape(-1, len(cols))
    return TrajectoryRecord(cols, samples, footer.get("termination", ""), footer.get("T_est"),
                            footer.get("config", {}))


def to_json(rec: TrajectoryRecord) -> str:
    obj = {"config": rec.config, "columns": list(rec.columns),
           "samples": [[float(v) for v in row] for row in rec.samples],
           "termination": rec.termination}
    if rec.T_est is not None:
        obj["T_est"] = rec.T_est
    return json.dumps(obj)


def from_json(text: str) -> TrajectoryRecord:
    obj = json.loads(text)
    cols = tuple(obj.get("columns", BASE_COLUMNS))
    samples = np.array(obj["samples"], dtype=float).reshape(-1, len(cols))
    return TrajectoryRecord(cols, samples, obj["termination"], obj.get("T_est"), obj.get("config", {}))


def dumps(rec: TrajectoryRecord, fmt: str = "csv") -> str:
    if fmt == "json":
        return to_json(rec)
    buf = io.StringIO()
    write_csv(rec, buf)
    return buf.getvalue()


def loads(text: str, fmt: str = "csv") -> TrajectoryRecord:
    return from_json(text) if fmt == "json" else read_csv(io.StringIO(text))
