import pytest

from ineqsimplex.rational import rat_parse

ACCEPTANCE_RESULTS = {}


def parse_table(printed):
    return [[rat_parse(c) for c in row] for row in printed]


def tableau_as_table(tab):
    return [list(tab.w_row)] + [list(r) for r in tab.rows]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    prev = ACCEPTANCE_RESULTS.get(number, (title, True))
    ACCEPTANCE_RESULTS[number] = (title, prev[1] and report.passed)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, ok = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
