import re

_ACCEPTANCE = {}
_PATTERN = re.compile(r"test_acceptance_(\d+)_")


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    match = _PATTERN.search(report.nodeid)
    if match:
        _ACCEPTANCE[int(match.group(1))] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        outcome = "PASS" if _ACCEPTANCE[number] == "passed" else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {number}: {outcome}")
