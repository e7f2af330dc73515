from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from harrisgraphs import Graph, build_graph, enumerate_harris, parse_graph6

# The unique order-7 Harris graph.
H7_G6 = "F~ee?"

# nodeid fragment -> (criterion number, outcome); filled by the hook below
_ACCEPTANCE_RESULTS: dict[int, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    num = int(report.nodeid.split("test_criterion_")[1][:2])
    if report.when == "call":
        _ACCEPTANCE_RESULTS[num] = report.outcome
    elif report.when == "setup" and report.outcome != "passed":
        _ACCEPTANCE_RESULTS[num] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE_RESULTS):
        verdict = "PASS" if _ACCEPTANCE_RESULTS[num] == "passed" else "FAIL"
        name = CRITERIA.get(num, "?")
        terminalreporter.write_line(f"criterion {num:02d} ({name}): {verdict}")


@pytest.fixture(scope="session")
def h7() -> Graph:
    return parse_graph6(H7_G6)


@pytest.fixture(scope="session")
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


@pytest.fixture(scope="session")
def census7():
    return enumerate_harris(7)


@pytest.fixture(scope="session")
def census8():
    return enumerate_harris(8)


@pytest.fixture(scope="session")
def census9():
    return enumerate_harris(9, threads=2)


@pytest.fixture(scope="session")
def catalogs_7_to_9(census7, census8, census9):
    return {7: census7, 8: census8, 9: census9}
