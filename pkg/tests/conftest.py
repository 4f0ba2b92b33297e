"""Shared pytest hooks.

The acceptance tests record one verdict line per criterion; printing them
from a terminal-summary hook keeps them visible even when pytest captures
test output (i.e. without ``-s``).
"""

acceptance_verdicts: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_verdicts:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_verdicts:
            terminalreporter.write_line(line)
