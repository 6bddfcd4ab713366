import re

_results: list[tuple[str, str, str]] = []


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _results.append((m.group(1), m.group(2).replace("_", " "), report.outcome.upper()))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, outcome in sorted(_results, key=lambda r: int(r[0])):
        terminalreporter.write_line(f"criterion {int(num)}: {'PASS' if outcome == 'PASSED' else 'FAIL'}  {title}")
