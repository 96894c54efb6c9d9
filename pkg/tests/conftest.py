from __future__ import annotations

import pytest

from brauer_f4.brauer import brauer

CRITERIA: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def br():
    return brauer()


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        ok, text = CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {text}")
