"""Curve and point file formats plus delimited result writers.

Two interchangeable curve formats, chosen by file suffix: JSON Lines
(".jsonl"/".json", one object {"id", "points"} per line) for structure and
CSV (".csv", header curve_id,seq,x1..xd) for spreadsheets. Floats are
written with Python's shortest round-trip representation, so a write/read
cycle reproduces every coordinate bit for bit.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass

import numpy as np

from .curves import Curve
from .pointdepth import DepthConfig

__all__ = [
    "RunConfig",
    "read_curves",
    "write_curves",
    "read_points",
    "write_table",
]


@dataclass(frozen=True)
class RunConfig:
    """Seeding and depth options shared by the CLI subcommands."""

    seed: int
    m: int
    delta: float | None = None
    delta_alpha: float | None = None
    method: str = "exact"
    n_directions: int = 100

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")
        if self.delta is not None and self.delta_alpha is not None:
            raise ValueError("set at most one of delta and delta-alpha")

    def depth_config(self) -> DepthConfig:
        return DepthConfig(
            delta=self.delta,
            delta_alpha=0.125 if self.delta_alpha is None else self.delta_alpha,
            method=self.method,
            n_directions=self.n_directions,
        )


def _fmt(x: float) -> str:
    return repr(float(x))


def _is_csv(path: str) -> bool:
    return str(path).lower().endswith(".csv")


def read_curves(path) -> list[Curve]:
    """Load a curve file (JSONL or CSV by suffix)."""
    if _is_csv(path):
        return _read_curves_csv(path)
    return _read_curves_jsonl(path)


def write_curves(curves, path) -> None:
    if _is_csv(path):
        _write_curves_csv(curves, path)
    else:
        _write_curves_jsonl(curves, path)


def _read_curves_jsonl(path) -> list[Curve]:
    out = []
    dim = None
    with open(path, "r", encoding="utf-8") as fh:
        for ln, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as e:
                raise ValueError(f"{path}:{ln}: not valid JSON: {e}") from None
            if not isinstance(rec, dict) or "id" not in rec or "points" not in rec:
                raise ValueError(f"{path}:{ln}: expected an object with id and points")
            curve = Curve(str(rec["id"]), rec["points"])
            if dim is None:
                dim = curve.dim
            elif curve.dim != dim:
                raise ValueError(f"{path}:{ln}: dimension {curve.dim} != {dim}")
            out.append(curve)
    if not out:
        raise ValueError(f"{path}: no curves found")
    return out


def _write_curves_jsonl(curves, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for c in curves:
            rec = {"id": c.id, "points": [[float(v) for v in row] for row in c.vertices]}
            fh.write(json.dumps(rec) + "\n")


def _read_curves_csv(path) -> list[Curve]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or len(header) < 3 or header[:2] != ["curve_id", "seq"]:
            raise ValueError(f"{path}: expected header curve_id,seq,x1,...")
        d = len(header) - 2
        rows: dict[str, list[tuple[int, list[float]]]] = {}
        order: list[str] = []
        for ln, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != d + 2:
                raise ValueError(f"{path}:{ln}: expected {d + 2} fields, got {len(row)}")
            cid = row[0]
            try:
                seq = int(row[1])
                coords = [float(v) for v in row[2:]]
            except ValueError:
                raise ValueError(f"{path}:{ln}: malformed numeric field") from None
            if cid not in rows:
                rows[cid] = []
                order.append(cid)
            if rows[cid] and seq <= rows[cid][-1][0]:
                raise ValueError(f"{path}:{ln}: seq not strictly increasing for {cid!r}")
            rows[cid].append((seq, coords))
    if not rows:
        raise ValueError(f"{path}: no curves found")
    return [Curve(cid, [c for _, c in rows[cid]]) for cid in order]


def _write_curves_csv(curves, path) -> None:
    curves = list(curves)
    d = curves[0].dim
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["curve_id", "seq"] + [f"x{i + 1}" for i in range(d)])
        for c in curves:
            for seq, row in enumerate(c.vertices):
                writer.writerow([c.id, seq] + [_fmt(v) for v in row])


def read_points(path) -> np.ndarray:
    """Load a plain point set: CSV rows of coordinates, optional x1.. header."""
    rows = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        for ln, row in enumerate(reader, start=1):
            if not row:
                continue
            if ln == 1 and row[0].strip().lower().startswith("x"):
                continue
            try:
                rows.append([float(v) for v in row])
            except ValueError:
                raise ValueError(f"{path}:{ln}: malformed numeric field") from None
    if not rows:
        raise ValueError(f"{path}: no points found")
    arr = np.asarray(rows, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{path}: non-finite coordinates")
    return arr


def write_table(path, header, rows) -> None:
    """Write a delimited table; floats use the shortest exact form."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([
                _fmt(v) if isinstance(v, float) else v for v in row
            ])
