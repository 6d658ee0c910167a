"""Serialization of scenario reports and plot tables.

Output is deterministic: reports keep the order they are given in, keys are
emitted in a fixed order and scalars use one canonical text form.  Exact
rationals become ``"p/q"`` strings so nothing is lost in JSON.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from importlib import resources

SCHEMA_VERSION = "1.0"
FORMATS = ("json", "csv", "text")

CSV_COLUMNS = (
    "scenario",
    "claim",
    "check",
    "computed",
    "expected",
    "relation",
    "provenance",
    "tolerance",
    "passed",
)


def load_schema() -> dict:
    """The JSON schema describing :func:`to_json` output."""
    text = resources.files(__package__).joinpath("report_schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def _value(x):
    """JSON-ready form of a computed or expected value."""
    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        return x
    if isinstance(x, (tuple, list)):
        return [_value(v) for v in x]
    return str(x)


def _text(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, (tuple, list)):
        return "[" + ", ".join(_text(v) for v in x) + "]"
    return str(_value(x))


def report_dict(report) -> dict:
    out = {
        "scenario": report.scenario,
        "claim": report.claim,
        "statement": report.statement,
        "params": {k: report.params[k] for k in sorted(report.params)},
        "passed": report.passed,
        "checks": [
            {
                "name": c.name,
                "computed": _value(c.computed),
                "expected": _value(c.expected),
                "relation": c.relation,
                "provenance": c.provenance,
                "tolerance": c.tolerance,
                "passed": c.passed,
            }
            for c in report.checks
        ],
        "notes": list(report.notes),
        "rows": [{k: _value(v) for k, v in row.items()} for row in report.rows],
    }
    if report.wall_time is not None:
        out["wall_time"] = report.wall_time
    return out


def document(reports) -> dict:
    reports = list(reports)
    return {
        "schema_version": SCHEMA_VERSION,
        "passed": all(r.passed for r in reports),
        "reports": [report_dict(r) for r in reports],
    }


def to_json(reports) -> str:
    return json.dumps(document(reports), indent=2, ensure_ascii=False) + "\n"


def to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        for c in r.checks:
            w.writerow(
                [
                    r.scenario,
                    r.claim,
                    c.name,
                    _text(c.computed),
                    _text(c.expected),
                    c.relation,
                    c.provenance,
                    _text(c.tolerance),
                    _text(c.passed),
                ]
            )
    return buf.getvalue()


def to_text(reports) -> str:
    lines = []
    reports = list(reports)
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        head = f"{status} {r.scenario} [{r.claim}] {len(r.checks) - len(r.failures)}/{len(r.checks)} checks"
        if r.wall_time is not None:
            head += f" in {r.wall_time:.3f}s"
        lines.append(head)
        if not r.passed:
            lines.append(f"  claim: {r.statement}")
        for c in r.failures:
            tol = "" if c.tolerance is None else f" (tol {c.tolerance!r})"
            lines.append(
                f"  FAIL {c.name}: computed {_text(c.computed)} {c.relation} expected {_text(c.expected)}{tol}"
            )
        for note in r.notes:
            lines.append(f"  note: {note}")
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} scenarios passed")
    return "\n".join(lines) + "\n"


def emit(reports, fmt: str) -> str:
    if fmt == "json":
        return to_json(reports)
    if fmt == "csv":
        return to_csv(reports)
    if fmt == "text":
        return to_text(reports)
    raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def plot_csv(rows, columns) -> str:
    """CSV with a header row; missing values are left empty."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_text(row.get(c)) for c in columns])
    return buf.getvalue()


__all__ = [
    "CSV_COLUMNS",
    "FORMATS",
    "SCHEMA_VERSION",
    "document",
    "emit",
    "load_schema",
    "plot_csv",
    "report_dict",
    "to_csv",
    "to_json",
    "to_text",
]
