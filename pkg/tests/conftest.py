"""Shared test configuration.

The acceptance tests record one summary line per criterion; the terminal
summary hook prints them at the end of every run so the pass/fail status of
each criterion is visible even when pytest captures stdout.
"""

from __future__ import annotations

ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, title: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    line = f"[{status}] acceptance criterion {number}: {title}{suffix}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
