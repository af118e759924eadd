"""Collects acceptance outcomes and prints one line per criterion at the end of the run."""

import pytest

_outcomes = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    report = (yield).get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    entry = _outcomes.setdefault(number, {"title": title, "passed": 0, "failed": 0, "skipped": 0})
    if report.when == "call" or report.outcome != "passed":
        entry[report.outcome] += 1


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        e = _outcomes[number]
        status = "FAIL" if e["failed"] else ("PASS" if e["passed"] else "SKIP")
        terminalreporter.write_line(
            f"criterion {number}: {status}  {e['title']}  ({e['passed']} passed, {e['failed']} failed, {e['skipped']} skipped)"
        )
