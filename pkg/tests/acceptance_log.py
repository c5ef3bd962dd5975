"""Collects one line per acceptance criterion for the terminal summary."""

from __future__ import annotations

LINES: list[str] = []


def report(number: int, ok: bool, message: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {message}"
    LINES.append(line)
    print(line)
