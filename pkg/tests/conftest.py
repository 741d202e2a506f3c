"""Shared test helpers and the acceptance report hook."""

import numpy as np
import pytest

ACCEPTANCE_LINES = []


def record_criterion(number, label, passed, detail):
    """Register one acceptance result; assert after recording."""
    line = f"criterion {number:2d} {label}: {'PASS' if passed else 'FAIL'} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert passed, line


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
