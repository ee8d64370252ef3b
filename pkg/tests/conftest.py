"""Shared pytest wiring: surface the acceptance verdict lines.

The acceptance tests record one PASS/FAIL line per criterion in
ACCEPTANCE_LINES; fd-level capture would otherwise swallow them, so a
terminal-summary hook replays the lines at the end of the run.
"""

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
