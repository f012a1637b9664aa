"""JSON and text serialization of deficit reports."""
from __future__ import annotations

import json
import math

from .inequalities import DeficitReport

SCALAR_FIELDS = ("L", "F", "A", "F_e", "delta", "delta2_sq")


def report_dict(report: DeficitReport) -> dict:
    """Plain-data view with a fixed key order."""
    out = {name: getattr(report, name) for name in SCALAR_FIELDS}
    out["bounds"] = dict(report.bounds)
    out["slacks"] = dict(report.slacks)
    out["constant_width"] = report.constant_width
    out["classification"] = report.classification.kind.value
    out["residual"] = report.classification.residual
    out["min_curvature"] = report.min_curvature
    return out


def _encode(value, indent, level) -> str:
    pad = " " * (indent * (level + 1))
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (int, float)):
        value = float(value)
        if not math.isfinite(value):
            raise ValueError(f"cannot encode non-finite number {value!r}")
        text = format(value, ".17g")
        return text
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_encode(v, indent, level + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + " " * (indent * level) + "}"
    raise TypeError(f"unsupported type {type(value).__name__}")


def report_json(report: DeficitReport, indent: int = 2) -> str:
    """Deterministic JSON text; every number carries 17 significant digits."""
    return _encode(report_dict(report), indent, 0) + "\n"


def report_text(report: DeficitReport) -> str:
    lines = [f"{name:<10} {getattr(report, name): .17g}" for name in SCALAR_FIELDS]
    lines.append(f"{'width':<10} {'constant' if report.constant_width else 'varying'}")
    lines.append(f"{'class':<10} {report.classification.kind.value} (residual {report.classification.residual:.3g})")
    lines.append("bounds:")
    lines.extend(f"  {k:<18} {v: .17g}" for k, v in report.bounds.items())
    lines.append("slacks:")
    lines.extend(f"  {k:<18} {v: .17g}" for k, v in report.slacks.items())
    return "\n".join(lines) + "\n"
