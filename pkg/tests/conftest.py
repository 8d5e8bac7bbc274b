import contextlib
import time

import pytest

_CRITERIA = []


@pytest.fixture
def criterion():
    """Context manager recording one acceptance line per criterion."""

    @contextlib.contextmanager
    def record(number, label, budget=None):
        start = time.perf_counter()
        try:
            yield
        except BaseException:
            _CRITERIA.append((number, "FAIL", label, time.perf_counter() - start))
            raise
        elapsed = time.perf_counter() - start
        status = "PASS" if budget is None or elapsed < budget else "FAIL"
        _CRITERIA.append((number, status, label, elapsed))
        assert status == "PASS", f"{label} took {elapsed:.2f}s, budget {budget}s"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, label, elapsed in sorted(_CRITERIA):
        terminalreporter.write_line(f"{status} criterion {number}: {label} ({elapsed:.2f}s)")
