"""Curve files: gnuplot-friendly CSV with a one-line JSON header, or plain JSON.

CSV layout::

    # {"grid": {...}, "kind": "fuzzy", "label": "fuzzy N=4", "n": 4, ...}
    lambda,t,trace,area,dimension
    0.10000000000000001,99.999999999999986,...

Reals are written with 17 significant digits so reading a file back gives
the in-memory curve exactly.
"""
from __future__ import annotations

import csv
import hashlib
import io
import json
import math
import os
import tempfile
from pathlib import Path

from .observables import CurvePoint, GeometryCurve

__all__ = [
    "CURVE_COLUMNS",
    "format_real",
    "atomic_write",
    "curve_to_csv",
    "curve_to_json",
    "write_curve",
    "read_curve",
    "read_curve_csv",
    "read_curve_json",
    "sha256_file",
]

CURVE_COLUMNS = ("lambda", "t", "trace", "area", "dimension")
_FOUR_PI = 4 * math.pi


def format_real(x: float) -> str:
    return f"{x:.17g}"


def metadata_line(metadata) -> str:
    return "# " + json.dumps(dict(metadata), sort_keys=True, separators=(", ", ": "))


def rows_to_csv(columns, rows, metadata=None) -> str:
    buf = io.StringIO()
    if metadata is not None:
        buf.write(metadata_line(metadata) + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([format_real(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _point_values(p: CurvePoint):
    return (p.lambda_, p.t, p.trace, p.area, p.dimension)


def curve_to_csv(curve: GeometryCurve, normalize_area: bool = False) -> str:
    columns = CURVE_COLUMNS + (("area_over_4pi",) if normalize_area else ())
    rows = []
    for p in curve.points:
        row = _point_values(p)
        if normalize_area:
            row += (p.area / _FOUR_PI,)
        rows.append(row)
    meta = dict(curve.metadata)
    meta.setdefault("label", curve.label)
    return rows_to_csv(columns, rows, meta)


def curve_to_json(curve: GeometryCurve, normalize_area: bool = False) -> str:
    points = []
    for p in curve.points:
        rec = dict(zip(CURVE_COLUMNS, _point_values(p)))
        if normalize_area:
            rec["area_over_4pi"] = p.area / _FOUR_PI
        points.append(rec)
    meta = dict(curve.metadata)
    meta.setdefault("label", curve.label)
    doc = {"label": curve.label, "metadata": meta, "points": points}
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def atomic_write(path, text: str) -> Path:
    """Write ``text`` to a temp file beside ``path`` and rename it into place."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def write_curve(curve: GeometryCurve, path, fmt: str = "csv", normalize_area: bool = False) -> Path:
    if fmt == "csv":
        text = curve_to_csv(curve, normalize_area)
    elif fmt == "json":
        text = curve_to_json(curve, normalize_area)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return atomic_write(path, text)


def _point_from_record(rec) -> CurvePoint:
    return CurvePoint(*(float(rec[c]) for c in CURVE_COLUMNS))


def read_curve_csv(path) -> GeometryCurve:
    metadata = {}
    body = []
    with open(path, encoding="utf-8", newline="") as fh:
        for line in fh:
            if line.startswith("#"):
                if not metadata:
                    metadata = json.loads(line[1:])
                continue
            if line.strip():
                body.append(line)
    points = tuple(_point_from_record(rec) for rec in csv.DictReader(body))
    return GeometryCurve(metadata.get("label", ""), points, metadata)


def read_curve_json(path) -> GeometryCurve:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    points = tuple(_point_from_record(rec) for rec in doc["points"])
    return GeometryCurve(doc["label"], points, doc.get("metadata", {}))


def read_curve(path) -> GeometryCurve:
    return read_curve_json(path) if Path(path).suffix == ".json" else read_curve_csv(path)


def sha256_file(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()
