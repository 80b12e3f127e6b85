"""File formats: GridField CSV + JSON header, trajectory directories, reports."""

from __future__ import annotations

import csv
import json
import math
import os
from pathlib import Path
from typing import Any, Iterable

import numpy as np

from .cr_operator import ConservedLedger, GridField

OUTPUT_ENV = "CRBOX_OUTPUT_DIR"


def output_dir(requested: str | Path | None, default: str = "crbox-output") -> Path:
    """Resolve the output directory; the CRBOX_OUTPUT_DIR environment variable wins."""
    env = os.environ.get(OUTPUT_ENV)
    path = Path(env) if env else Path(requested or default)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _fmt(x: float) -> str:
    return repr(float(x))


def write_grid_field(f: GridField, path: str | Path) -> Path:
    """Rows (i, j, re, im) in a .csv next to a .json header with the geometry."""
    path = Path(path)
    header = {"box_half": f.box_half, "n": f.n, "interp": "bicubic",
              "x0": -f.box_half, "h": f.h, "layout": "values[i, j] at (x0 + i h, x0 + j h)"}
    path.with_suffix(".json").write_text(json.dumps(header, indent=2, sort_keys=True))
    ii, jj = np.meshgrid(np.arange(f.n), np.arange(f.n), indexing="ij")
    with open(path.with_suffix(".csv"), "w", newline="") as fh:
        fh.write("i,j,re,im\n")
        for i, j, v in zip(ii.ravel(), jj.ravel(), f.values.ravel()):
            fh.write(f"{i},{j},{_fmt(v.real)},{_fmt(v.imag)}\n")
    return path.with_suffix(".csv")


def read_grid_field(path: str | Path) -> GridField:
    path = Path(path)
    header = json.loads(path.with_suffix(".json").read_text())
    n = int(header["n"])
    vals = np.zeros((n, n), dtype=complex)
    with open(path.with_suffix(".csv"), newline="") as fh:
        for row in csv.DictReader(fh):
            vals[int(row["i"]), int(row["j"])] = complex(float(row["re"]), float(row["im"]))
    return GridField(float(header["box_half"]), n, vals)


def write_ledger(times: Iterable[float], rows: Iterable[ConservedLedger], path: str | Path) -> Path:
    path = Path(path)
    with open(path, "w", newline="") as fh:
        fh.write("t," + ",".join(ConservedLedger.FIELDS) + "\n")
        for t, row in zip(times, rows):
            fh.write(",".join(_fmt(x) for x in [t, *row.as_row()]) + "\n")
    return path


def write_trajectory(traj, directory: str | Path) -> Path:
    """Snapshots as GridField files plus ledger.csv."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for k, (t, fld) in enumerate(traj.snapshots):
        write_grid_field(fld, directory / f"snapshot_{k:04d}")
    write_ledger(traj.times, traj.ledger, directory / "ledger.csv")
    return directory


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        x = float(obj)
        return x if math.isfinite(x) else repr(x)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [_jsonable(obj.real), _jsonable(obj.imag)]
    return obj


def write_json(obj: Any, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(json.dumps(_jsonable(obj), indent=2, sort_keys=True) + "\n")
    return path


def write_csv(columns: dict[str, Iterable], path: str | Path) -> Path:
    """Column-oriented table; all columns must have equal length."""
    path = Path(path)
    names = list(columns)
    data = [list(columns[c]) for c in names]
    if len({len(d) for d in data}) > 1:
        raise ValueError("columns differ in length")
    with open(path, "w", newline="") as fh:
        fh.write(",".join(names) + "\n")
        for row in zip(*data):
            fh.write(",".join(_fmt(x) if not isinstance(x, (int, np.integer)) else str(x)
                              for x in row) + "\n")
    return path
