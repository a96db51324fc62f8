"""CSV and JSON artifacts shared by the command line tools.

A CDF file has the fixed header ``p,sinr_dB`` and one row per probability
on the 0.001 grid ``0.001 ... 0.999``, so any two files line up row by row.
"""
from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

CSV_HEADER = ("p", "sinr_dB")
CSV_GRID = np.round(np.arange(1, 1000) / 1000.0, 3)


class CdfFileError(ValueError):
    """A CDF CSV file does not follow the ``p,sinr_dB`` schema."""


def write_cdf_csv(path, cdf, grid=CSV_GRID):
    """Write ``cdf.interpolated_quantile`` sampled on ``grid``."""
    values = np.asarray(cdf.interpolated_quantile(grid), dtype=float)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for p, v in zip(grid, values):
            writer.writerow([f"{p:.3f}", f"{v:.9f}"])


class TabulatedCdf:
    """CDF known through a table of quantiles; linear in between."""

    def __init__(self, p, sinr_dB):
        self.p = np.asarray(p, dtype=float)
        self.sinr_dB = np.asarray(sinr_dB, dtype=float)

    def quantile(self, p):
        if np.any((np.asarray(p) < self.p[0] - 1e-12) | (np.asarray(p) > self.p[-1] + 1e-12)):
            raise ValueError("probability outside the tabulated range")
        return np.interp(p, self.p, self.sinr_dB)

    interpolated_quantile = quantile

    def cdf(self, x):
        return np.interp(x, self.sinr_dB, self.p, left=0.0, right=1.0)


def read_cdf_csv(path) -> TabulatedCdf:
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
    except (OSError, UnicodeDecodeError) as exc:
        raise CdfFileError(f"{path}: {exc}") from exc
    if not rows or tuple(c.strip() for c in rows[0]) != CSV_HEADER:
        raise CdfFileError(f"{path}: header must be {','.join(CSV_HEADER)}")
    try:
        data = np.array([[float(a), float(b)] for a, b in rows[1:]], dtype=float)
    except ValueError as exc:
        raise CdfFileError(f"{path}: malformed row ({exc})") from exc
    if len(data) < 2 or not np.all(np.isfinite(data)):
        raise CdfFileError(f"{path}: need at least two finite rows")
    p, q = data[:, 0], data[:, 1]
    if np.any(np.diff(p) <= 0) or np.any(np.diff(q) < 0) or p[0] <= 0 or p[-1] >= 1:
        raise CdfFileError(f"{path}: p must increase inside (0, 1), sinr_dB must not decrease")
    return TabulatedCdf(p, q)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, np.generic):
        return obj.item()
    return obj


def write_json(path, payload):
    Path(path).write_text(json.dumps(_jsonable(payload), indent=2, sort_keys=True) + "\n")
