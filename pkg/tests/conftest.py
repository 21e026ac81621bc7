"""Shared test configuration.

The acceptance tests record one PASS/FAIL line per criterion; the hook
below replays them in a dedicated section at the end of the run so the
verdicts stay visible regardless of output capturing.
"""

from hypothesis import settings

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")

_criterion_lines: list[str] = []


def record_criterion(line: str):
    _criterion_lines.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_criterion_lines):
            terminalreporter.write_line(line)
