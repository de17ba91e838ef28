"""Shared pytest plumbing.

The acceptance tests record one PASS/FAIL line per criterion; the hook below
prints them as a summary block at the end of the run so the outcome of each
criterion is visible even inside a long -v listing.
"""

import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Recorder for acceptance criteria: call with (label, ok) and assert
    the returned flag so the line is emitted even when the check fails."""

    def record(label: str, ok: bool) -> bool:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'} {label}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
