"""Prints one PASS/FAIL line per acceptance criterion at the end of a run."""

import re

_results = {}


def pytest_runtest_logreport(report):
    match = re.search(r"test_acceptance\.py.*test_criterion_(\d+)", report.nodeid)
    if match and report.when == "call":
        _results[int(match.group(1))] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(_results):
        outcome = "PASS" if _results[num] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d}: {outcome}")
