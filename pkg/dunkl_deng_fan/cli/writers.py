import csv
import numbers
from enum import Enum
from typing import Any, Dict, Iterable, List, Sequence

from dunkl_deng_fan.model.config import CSV_SIGNIFICANT_DIGITS


def format_value(value: Any) -> str:
    """
    Locale-independent text of a CSV cell; reals get 12 significant digits.
    """
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return format(float(value), f".{CSV_SIGNIFICANT_DIGITS}g")
    return str(value)


def write_csv(path: str, columns: Sequence[str], rows: Iterable[Dict[str, Any]]) -> int:
    """
    Write rows under a header line, newline a single line feed.

    Returns:
        int: Number of data rows written.
    """
    written = 0
    with open(path, "w", newline="", encoding="utf-8") as stream:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_value(row[column]) for column in columns])
            written += 1
    return written


def render_report(criteria: List[Dict[str, Any]], accepted: bool) -> str:
    """
    Human-readable pass/fail summary; claims are reported but never fail a run.
    """
    lines = ["Validation report", ""]
    for criterion in criteria:
        if criterion["hard"]:
            status = "PASS" if criterion["passed"] else "FAIL"
        else:
            status = "CLAIM HOLDS" if criterion["passed"] else "CLAIM FAILS"
        lines.append(f"[{status}] {criterion['key']}: {criterion['title']}")
        lines.append(f"    {criterion['detail']}")
    hard = [c for c in criteria if c["hard"]]
    passed = sum(1 for c in hard if c["passed"])
    failed = [c["key"] for c in hard if not c["passed"]]
    lines.append("")
    lines.append(f"Hard criteria passed: {passed}/{len(hard)}")
    if failed:
        lines.append(f"Failing criteria: {', '.join(failed)}")
    lines.append(f"Result: {'ACCEPTED' if accepted else 'REJECTED'}")
    return "\n".join(lines) + "\n"


def write_report(path: str, criteria: List[Dict[str, Any]], accepted: bool) -> None:
    with open(path, "w", newline="", encoding="utf-8") as stream:
        stream.write(render_report(criteria, accepted))
