"""Prints one PASS/FAIL line per acceptance criterion after the run."""

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_ac" not in report.nodeid:
        return
    entry = _ACCEPTANCE.setdefault(report.nodeid, {"ok": True, "secs": 0.0})
    entry["secs"] += report.duration
    if report.failed:
        entry["ok"] = False


def pytest_collection_modifyitems(items):
    for item in items:
        if "test_acceptance.py::test_ac" in item.nodeid:
            _ACCEPTANCE.setdefault(item.nodeid, {"ok": True, "secs": 0.0})["doc"] = item.function.__doc__


def pytest_terminal_summary(terminalreporter):
    ran = {k: v for k, v in _ACCEPTANCE.items() if "doc" in v and v["secs"]}
    if not ran:
        return
    terminalreporter.section("acceptance criteria (exact, tolerance 0)")
    for nodeid in sorted(ran):
        v = ran[nodeid]
        label, _, text = v["doc"].partition(" ")
        terminalreporter.write_line(f"{label} {'PASS' if v['ok'] else 'FAIL'} [{v['secs']:.2f}s] {text.strip()}")
