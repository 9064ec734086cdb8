from __future__ import annotations

import pytest

from divgraph import build_sieve

_criteria: dict[str, str] = {}


@pytest.fixture(scope="session")
def sieve_1e4():
    return build_sieve(10**4)


@pytest.fixture(scope="session")
def sieve_1e5():
    return build_sieve(10**5)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _criteria[report.nodeid.split("::")[-1]] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.when == "setup" and report.outcome != "passed":
        _criteria[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _criteria.items():
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{mark}] {name}")
