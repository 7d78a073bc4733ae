import contextlib
import time

import pytest

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Context manager recording one PASS/FAIL line (with wall time) per acceptance criterion."""

    @contextlib.contextmanager
    def record(name: str, budget_s: float):
        start = time.perf_counter()
        try:
            yield
        except BaseException as e:
            elapsed = time.perf_counter() - start
            _ACCEPTANCE_LINES.append(f"FAIL  {name}  ({elapsed:.2f}s, budget {budget_s:g}s): {e!r}"[:300])
            raise
        elapsed = time.perf_counter() - start
        if elapsed >= budget_s:
            _ACCEPTANCE_LINES.append(f"FAIL  {name}  ({elapsed:.2f}s, over budget {budget_s:g}s)")
            pytest.fail(f"{name} took {elapsed:.2f}s, budget {budget_s}s")
        _ACCEPTANCE_LINES.append(f"PASS  {name}  ({elapsed:.2f}s, budget {budget_s:g}s)")

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
