import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from specht_invariants import kernels
from specht_invariants.partitions import Partition

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(params=kernels.available())
def backend(request):
    """Run the test once per available kernel backend."""
    previous = kernels.backend()
    kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(previous)


@st.composite
def partitions(draw, min_size=0, max_size=25):
    n = draw(st.integers(min_size, max_size))
    parts = []
    remaining, cap = n, n
    while remaining:
        p = draw(st.integers(1, min(remaining, cap)))
        parts.append(p)
        remaining -= p
        cap = p
    return Partition(parts)


_criteria: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = _criterion_markers.get(report.nodeid)
    if marker is not None:
        number, title = marker
        _criteria[number] = (title, "PASS" if report.passed else "FAIL")


_criterion_markers: dict[str, tuple[int, str]] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _criterion_markers[item.nodeid] = tuple(mark.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcome = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {outcome}  {title}")
