from __future__ import annotations

import math

import pytest

#: (criterion number, verdict, detail) appended by tests/test_acceptance.py
ACCEPTANCE_LINES: list[tuple[int, str, str]] = []


@pytest.fixture
def sech_half_pi() -> float:
    return 1.0 / math.cosh(math.pi / 2.0)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n, verdict, detail in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(f"criterion {n:2d}: {verdict}  {detail}")
