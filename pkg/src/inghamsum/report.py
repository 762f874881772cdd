"""Structured verification reports with canonical, byte-stable output.

JSON and CSV writers here are the single source of truth for on-disk
formatting: floats render through repr (shortest round-trip form),
complex values as [re, im] pairs, missing values as null/empty. A report
serialized, re-parsed and re-serialized reproduces identical bytes.

Wall time is tracked in the in-memory summary but excluded from
serialization, since emitted artifacts must be byte-identical across
runs of the same configuration.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

CSV_COLUMNS = (
    "n",
    "re_mean",
    "im_mean",
    "re_g",
    "im_g",
    "residual_t1",
    "residual_t3",
    "mu_alpha",
    "s_ratio",
    "pass",
)

# Summary keys dropped from serialized output (non-reproducible).
VOLATILE_SUMMARY_KEYS = ("wall_time_s",)


def _round_trip_float(x) -> float:
    return float(x)


def jsonable(value):
    """Convert a value to deterministic JSON-ready form.

    Complex numbers become [re, im]; numpy scalars collapse to Python
    scalars; containers convert recursively.
    """
    if value is None or isinstance(value, (bool, str, int)):
        return value
    if isinstance(value, complex):
        return [_round_trip_float(value.real), _round_trip_float(value.imag)]
    if isinstance(value, float):
        return _round_trip_float(value)
    if isinstance(value, np.complexfloating):
        return jsonable(complex(value))
    if isinstance(value, np.floating):
        return _round_trip_float(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value)!r}")


def canonical_json_bytes(obj) -> bytes:
    """Canonical JSON encoding: 2-space indent, preserved key order,
    trailing newline. Parsing and re-encoding is byte-stable."""
    return (json.dumps(jsonable(obj), indent=2, ensure_ascii=False) + "\n").encode()


def csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def csv_bytes(columns, rows) -> bytes:
    """Deterministic CSV: fixed column order, repr floats, LF newlines."""
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(csv_cell(row.get(col)) for col in columns))
    return ("\n".join(lines) + "\n").encode()


@dataclass(frozen=True)
class ReportRow:
    """One per-n row of a verification report.

    ratio is None either when it is not applicable or as the infinity
    marker (deviation with a vanishing denominator); ratio_infinite
    distinguishes the two.
    """

    n: int
    mean: complex | None = None
    g: complex | None = None
    s_ratio: float | None = None
    euler_product_at_1: complex | None = None
    residual_t1: float | None = None
    residual_t3: float | None = None
    mu_alpha: float | None = None
    ratio: float | None = None
    ratio_infinite: bool = False
    passed: bool = True

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "mean": jsonable(self.mean),
            "g": jsonable(self.g),
            "s_ratio": jsonable(self.s_ratio),
            "euler_product_at_1": jsonable(self.euler_product_at_1),
            "residual_t1": jsonable(self.residual_t1),
            "residual_t3": jsonable(self.residual_t3),
            "mu_alpha": jsonable(self.mu_alpha),
            "ratio": jsonable(self.ratio),
            "ratio_infinite": self.ratio_infinite,
            "pass": self.passed,
        }

    def to_csv_obj(self) -> dict:
        return {
            "n": self.n,
            "re_mean": None if self.mean is None else self.mean.real,
            "im_mean": None if self.mean is None else self.mean.imag,
            "re_g": None if self.g is None else self.g.real,
            "im_g": None if self.g is None else self.g.imag,
            "residual_t1": self.residual_t1,
            "residual_t3": self.residual_t3,
            "mu_alpha": self.mu_alpha,
            "s_ratio": self.s_ratio,
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    """Rows (sorted by n) plus a summary record for one experiment."""

    experiment_id: str
    rows: list[ReportRow] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def __post_init__(self):
        ns = [row.n for row in self.rows]
        if ns != sorted(ns):
            raise ValueError("report rows must be sorted by n ascending")

    @property
    def passed(self) -> bool:
        """Overall verdict: the summary's trend-level pass when the
        experiment defines one (per-row flags may legitimately fail
        inside the burn-in window), else the conjunction of row flags."""
        own = self.summary.get("pass")
        if own is not None:
            return bool(own)
        return all(row.passed for row in self.rows)

    def serializable_summary(self) -> dict:
        return {
            k: jsonable(v)
            for k, v in self.summary.items()
            if k not in VOLATILE_SUMMARY_KEYS
        }

    def to_json_bytes(self) -> bytes:
        return canonical_json_bytes(
            {
                "experiment_id": self.experiment_id,
                "rows": [row.to_json_obj() for row in self.rows],
                "summary": self.serializable_summary(),
            }
        )

    def to_csv_bytes(self) -> bytes:
        return csv_bytes(CSV_COLUMNS, [row.to_csv_obj() for row in self.rows])
