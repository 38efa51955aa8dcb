"""Per-criterion summary for the acceptance suite.

Tests tagged ``@pytest.mark.criterion("ACn", "title")`` are grouped and a
single PASS/FAIL line per criterion is printed at the end of the run.
"""
from collections import OrderedDict

import pytest

_results: "OrderedDict[str, dict]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, title): acceptance criterion a test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not rep.failed:
        return
    cid, title = mark.args
    entry = _results.setdefault(cid, {"title": title, "failed": [], "n": 0})
    if rep.when == "call":
        entry["n"] += 1
    if rep.failed:
        entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_results, key=lambda c: int(c[2:])):
        e = _results[cid]
        status = "FAIL" if e["failed"] else "PASS"
        extra = f"  (failing: {', '.join(e['failed'])})" if e["failed"] else ""
        terminalreporter.write_line(f"{cid} {status}: {e['title']}{extra}")
