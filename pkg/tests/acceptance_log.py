"""Collects one pass/fail line per acceptance criterion for the terminal summary."""

import re

LINES: list[str] = []


def record(number: int, ok: bool, detail: str) -> str:
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    LINES.append(line)
    print(line)
    return line


def order(line: str) -> int:
    return int(re.search(r"criterion\s+(\d+)", line).group(1))
