"""Serialisation of verification reports: JSON for machines, aligned text for people.

Rationals are always written as ``"p/q"`` in lowest terms (``"3/1"`` for
integers).  Decimal approximations appear only in text output and are
prefixed with ``~``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .invariants import BOUND_FORMULAS
from .verify import Entry, LemmaCheckResult, VerificationReport

SCHEMA_VERSION = 1


def rational(q: Fraction | None) -> str | None:
    if q is None:
        return None
    return f"{q.numerator}/{q.denominator}"


def approx(q: Fraction, digits: int = 6) -> str:
    return f"~{float(q):.{digits}f}"


def _entry(e: Entry) -> dict[str, Any]:
    return {
        "graph6": e.graph6,
        "name": e.name,
        "H": rational(e.H),
        "D": e.D,
        "status": {b.value: s.value for b, s in e.status.items()},
    }


def report_to_dict(report: VerificationReport, *, include_timing: bool = False) -> dict[str, Any]:
    """Plain-data form of a report.

    Wall time is left out unless asked for, so that identical sweeps
    serialise to identical bytes.
    """
    out: dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "mode": report.mode,
        "graph_class": report.graph_class.value,
        "order_range": [report.n_min, report.n_max],
        "bounds": [b.value for b in report.bounds],
        "orders": [
            {
                "n": o.n,
                "graph_count": o.graph_count,
                "violations": [_entry(e) for e in o.violations],
                "equalities": [_entry(e) for e in o.equalities],
                "min_slack": {b.value: rational(v) for b, v in o.min_slack.items()},
            }
            for o in report.orders
        ],
        "contract_satisfied": report.contract_satisfied,
        "contract_mismatches": list(report.contract_mismatches),
    }
    if include_timing:
        out["wall_time_seconds"] = round(report.wall_time, 3)
    return out


def report_to_json(report: VerificationReport, *, include_timing: bool = False) -> str:
    return json.dumps(report_to_dict(report, include_timing=include_timing), indent=2, sort_keys=True) + "\n"


def _names(entries: list[Entry]) -> str:
    if not entries:
        return "-"
    return ", ".join(e.name or e.graph6 for e in entries)


def report_to_text(report: VerificationReport, *, include_timing: bool = False, digits: int = 6) -> str:
    lines = [
        f"mode: {report.mode}   class: {report.graph_class.value}   orders: {report.n_min}..{report.n_max}",
    ]
    for b in report.bounds:
        lines.append(f"  {b.value:<22} {BOUND_FORMULAS[b]}")
    header = ["n", "graphs", "violations", "equalities"] + [f"min slack {b.value}" for b in report.bounds]
    rows = []
    for o in report.orders:
        slack = []
        for b in report.bounds:
            v = o.min_slack.get(b)
            slack.append("-" if v is None else f"{rational(v)} ({approx(v, digits)})")
        rows.append([str(o.n), str(o.graph_count), _names(o.violations), _names(o.equalities), *slack])
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines.append(fmt.format(*header).rstrip())
    lines.append(fmt.format(*("-" * w for w in widths)).rstrip())
    lines += [fmt.format(*r).rstrip() for r in rows]
    if report.violations or report.equalities:
        lines.append("")
        lines.append("flagged graphs:")
        for kind, entries in (("violation", report.violations), ("equality", report.equalities)):
            for e in entries:
                st = " ".join(f"{b.value}={s.value}" for b, s in e.status.items())
                lines.append(f"  {kind:<9} {e.graph6:<12} {e.name or '?':<10} H={rational(e.H)} D={e.D} {st}")
    if report.contract_satisfied is not None:
        lines.append("")
        lines.append(f"contract: {'satisfied' if report.contract_satisfied else 'VIOLATED'}")
        lines += [f"  {m}" for m in report.contract_mismatches]
    if include_timing:
        lines.append(f"wall time: {report.wall_time:.2f} s")
    return "\n".join(lines) + "\n"


def lemma_to_dict(result: LemmaCheckResult) -> dict[str, Any]:
    return {
        "lemma": result.lemma,
        "grid": result.grid,
        "passed": result.passed,
        "minimum": rational(result.minimum),
        "argmin": [rational(x) for x in result.argmin],
        "failure": None if result.failure is None else [rational(x) for x in result.failure],
    }


def lemma_to_text(result: LemmaCheckResult, digits: int = 6) -> str:
    at = ", ".join(rational(x) for x in result.argmin)
    status = "pass" if result.passed else f"FAIL at ({', '.join(rational(x) for x in result.failure)})"
    return (
        f"{result.lemma}: {status}; grid {result.grid}; "
        f"min {rational(result.minimum)} ({approx(result.minimum, digits)}) at ({at})"
    )
