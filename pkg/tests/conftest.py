import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, summary): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, summary = mark.args
    failed_setup = report.when == "setup" and not report.passed
    if report.when == "call" or failed_setup:
        previous = _CRITERIA.get(number, ("passed", summary))[0]
        verdict = "failed" if (previous == "failed" or not report.passed) else "passed"
        _CRITERIA[number] = (verdict, summary)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        verdict, summary = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if verdict == 'passed' else 'FAIL'}  {summary}")
