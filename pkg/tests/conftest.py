"""Shared pytest plumbing: the acceptance result ledger.

Acceptance tests append one line per criterion; the terminal-summary hook
replays them after the run so the pass/fail ledger is visible even under
output capture.
"""

import pytest

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
