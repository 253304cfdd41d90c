"""CSV / JSON serialisation of sweep tables and region scans."""

from __future__ import annotations

import io
import json
import math
import sys

SCHEMA_VERSION = "1"
SWEEP_COLUMNS = ("y", "beta", "predicted", "ratio", "bracket_lo", "bracket_hi", "residual", "iterations", "flags")
GL3_EXTRA_COLUMNS = ("w_max", "w_ms", "sign_agrees")
SCAN_COLUMNS = ("lambda1", "lambda2", "lambda3", "argmax", "matches", "excluded")
MISSING = "N/A"


def fmt(value) -> str:
    """17 significant digits, '.' separator; undefined values become N/A."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return MISSING
        return format(value, ".17g")
    return str(value)


def sweep_records(table, extra=None) -> list:
    records = []
    for row in table.rows:
        rec = {
            "y": row.y,
            "beta": row.beta,
            "predicted": row.predicted,
            "ratio": row.ratio,
            "bracket_lo": row.bracket_lo,
            "bracket_hi": row.bracket_hi,
            "residual": row.residual,
            "iterations": row.iterations,
            "flags": ";".join(row.flags),
        }
        if extra is not None:
            rec.update(extra(row))
        records.append(rec)
    return records


def to_csv(records: list, columns) -> str:
    buf = io.StringIO()
    buf.write(",".join(columns) + "\n")
    for rec in records:
        buf.write(",".join(fmt(rec[c]) for c in columns) + "\n")
    return buf.getvalue()


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def to_json(records: list, columns, metadata: dict) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "metadata": metadata,
        "columns": list(columns),
        "rows": [{c: _json_value(rec[c]) for c in columns} for rec in records],
    }
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def write(text: str, path) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", newline="\n", encoding="utf-8") as fh:
        fh.write(text)
