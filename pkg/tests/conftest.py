import re

import pytest

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_results: dict[int, dict] = {}


@pytest.fixture
def note(request):
    """Attach a one-line detail to the current criterion's summary line."""
    m = _CRITERION.search(request.node.name)

    def _note(text: str) -> None:
        if m:
            _results.setdefault(int(m.group(1)), {"name": m.group(2)})["note"] = text

    return _note


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    entry = _results.setdefault(int(m.group(1)), {"name": m.group(2)})
    if report.when == "call" or report.failed:
        entry["outcome"] = "PASS" if report.passed else "FAIL"
        entry["duration"] = entry.get("duration", 0.0) + report.duration
    elif report.skipped:
        entry["outcome"] = "SKIP"


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results):
        e = _results[num]
        line = f"{e.get('outcome', '????')} {num:2d} {e['name'].replace('_', ' ')} ({e.get('duration', 0.0):.2f} s)"
        if "note" in e:
            line += f": {e['note']}"
        terminalreporter.write_line(line)
