"""Deterministic report document and JSON serialization.

The JSON writer is hand-rolled so that byte-identical output is a property
of the code, not of library version or locale: keys are sorted, floats are
rendered with 17 significant digits, and no timestamps enter the document.
"""

from __future__ import annotations

import math

from .claims import ClaimResult

__all__ = ["report_document", "dumps", "summary_counts"]

VERSION = "0.1.0"


def _fmt_float(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return format(float(x), ".17g")


def _escape(s: str) -> str:
    out = ['"']
    for ch in s:
        if ch == '"':
            out.append('\\"')
        elif ch == "\\":
            out.append("\\\\")
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\t":
            out.append("\\t")
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    out.append('"')
    return "".join(out)


def dumps(obj) -> str:
    """Key-sorted, 17-significant-digit, locale-independent JSON."""
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, complex):
        return dumps({"re": obj.real, "im": obj.imag})
    if isinstance(obj, str):
        return _escape(obj)
    if isinstance(obj, dict):
        items = sorted(obj.items(), key=lambda kv: str(kv[0]))
        inner = ",".join(f"{_escape(str(k))}:{dumps(v)}" for k, v in items)
        return "{" + inner + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dumps(v) for v in obj) + "]"
    if hasattr(obj, "item"):  # numpy scalar
        return dumps(obj.item())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _claim_projection(r: ClaimResult) -> dict:
    details = {}
    for k, v in r.details.items():
        if hasattr(v, "item"):
            v = v.item()
        if isinstance(v, complex):
            v = {"re": v.real, "im": v.imag}
        details[k] = v
    return {
        "claim_id": r.claim_id,
        "surfaces": list(r.surfaces),
        "params": {k: float(v) for k, v in r.params.items()},
        "grid": r.grid,
        "tolerance": float(r.tolerance),
        "max_residual": float(r.max_residual),
        "engine_agreement": float(r.engine_agreement),
        "verdict": r.verdict,
        "expected": details.get("expected", ""),
        "notes": r.notes,
        "details": details,
    }


def summary_counts(results: list[ClaimResult]) -> dict:
    counts = {"PASS": 0, "FAIL": 0, "FLAGGED": 0, "unexpected": 0}
    for r in results:
        counts[r.verdict] = counts.get(r.verdict, 0) + 1
        expected = r.details.get("expected")
        if expected and r.verdict != expected:
            counts["unexpected"] += 1
    return counts


def report_document(results: list[ClaimResult], grid: tuple, seed: int,
                    tolerance: float) -> dict:
    return {
        "version": VERSION,
        "claims": sorted((_claim_projection(r) for r in results),
                         key=lambda c: c["claim_id"]),
        "environment": {
            "tolerances": {"default": float(tolerance), "oracle": 1e-6},
            "grid": f"{grid[0]}x{grid[1]}",
            "seed": int(seed),
        },
        "summary": summary_counts(results),
    }
