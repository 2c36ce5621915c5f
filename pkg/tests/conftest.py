import pytest

_results = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = report.user_properties and dict(report.user_properties).get("acceptance")
    if marker:
        _results[marker] = report.outcome


@pytest.fixture(autouse=True)
def _acceptance_tag(request, record_property):
    m = request.node.get_closest_marker("acceptance")
    if m is not None:
        record_property("acceptance", (m.args[0], m.args[1]))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), outcome in sorted(_results.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] AC{number}: {title}")
