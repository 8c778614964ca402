import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[int, tuple[str, list[str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (report.when != "call" and report.passed):
        return
    number, title = mark.args
    _criteria.setdefault(number, (title, []))[1].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcomes = _criteria[number]
        ok = outcomes and all(o == "passed" for o in outcomes)
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}")
