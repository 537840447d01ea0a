import pytest

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, label): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    key = marker.args
    failed = report.failed or (report.when == "call" and report.skipped)
    if report.when == "call" or failed:
        prev = _results.get(key, True)
        _results[key] = prev and not failed


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (num, label), ok in sorted(_results.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  [{num:02d}] {label}")
    passed = sum(_results.values())
    terminalreporter.write_line(f"{passed}/{len(_results)} acceptance criteria passed")
