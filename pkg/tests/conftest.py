import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_acceptance: dict[str, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    criterion = marker.kwargs.get("criterion") or marker.args[0]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
        prev = _acceptance.get(criterion)
        if prev is None or prev[0] == "PASS":
            _acceptance[criterion] = (status, item.name)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(_acceptance, key=lambda c: int(c.split(".")[0])):
        status, name = _acceptance[criterion]
        terminalreporter.write_line(f"[{status}] criterion {criterion}  ({name})")
