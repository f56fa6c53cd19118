"""Shared test helpers.

The acceptance tests register one summary line per criterion; the hook
below replays them at the end of the run so the verdicts stay visible
even when pytest captures stdout.
"""

import pytest

_summary_lines = []


def record_line(line: str) -> None:
    _summary_lines.append(line)


@pytest.fixture(scope="session")
def criterion_report():
    def _report(num: int, name: str, passed: bool, detail: str = "") -> None:
        status = "PASS" if passed else "FAIL"
        line = f"criterion {num} ({name}): {status}" + (f" [{detail}]" if detail else "")
        record_line(line)
        print(line)
        assert passed, line

    return _report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _summary_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in _summary_lines:
        terminalreporter.write_line(line)
