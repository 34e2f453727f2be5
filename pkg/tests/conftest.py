import time
from contextlib import contextmanager

import pytest

_RESULTS: list[tuple[str, str, float, float]] = []


@pytest.fixture
def criterion():
    """Context manager that times a block, enforces its limit and records pass/fail."""

    @contextmanager
    def run(name: str, limit: float):
        start = time.perf_counter()
        status = "FAIL"
        try:
            yield
            elapsed = time.perf_counter() - start
            assert elapsed < limit, f"{name} took {elapsed:.2f}s, limit {limit}s"
            status = "PASS"
        finally:
            _RESULTS.append((name, status, time.perf_counter() - start, limit))

    return run


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, elapsed, limit in _RESULTS:
        terminalreporter.write_line(f"{status}  {name}  ({elapsed:.2f}s, limit {limit:g}s)")
