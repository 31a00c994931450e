"""Shared test plumbing: the acceptance-criteria summary table.

Criterion tests register one verdict line each; the lines are printed
as a dedicated section at the end of the pytest run so the pass/fail
status of every numbered criterion is visible in one place.
"""

_ACCEPTANCE_LINES = {}


def record_acceptance(number: str, line: str) -> None:
    _ACCEPTANCE_LINES[number] = line


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE_LINES, key=lambda k: (len(k), k)):
        terminalreporter.write_line(_ACCEPTANCE_LINES[number])
