import time
from contextlib import contextmanager

import pytest

from ssq.core import Diagram
from hypothesis import strategies as st

_RESULTS = []


@st.composite
def diagrams(draw, max_n=10, min_n=1):
    n = draw(st.integers(min_n, max_n))
    bounds = [n]
    for i in range(2, n + 1):
        prev = bounds[-1]
        if prev < i:
            bounds.append(i - 1)
            continue
        bounds.append(draw(st.integers(i - 1, prev)))
    return Diagram(tuple(bounds))


@pytest.fixture
def criterion():
    """Time a block and record one PASS/FAIL line for the acceptance summary."""

    @contextmanager
    def record(label, budget):
        start = time.perf_counter()
        ok = False
        try:
            yield
            elapsed = time.perf_counter() - start
            assert elapsed < budget, f"{label}: {elapsed:.2f}s over the {budget}s budget"
            ok = True
        finally:
            _RESULTS.append((label, ok, time.perf_counter() - start, budget))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, elapsed, budget in _RESULTS:
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status}  {label}  [{elapsed:.2f}s / {budget}s]")
