import time

import pytest

SUITE_BUDGET_S = 30.0

# (criterion, passed, detail) rows appended by test_acceptance.py
ACCEPTANCE_LINES: list[tuple[str, bool, str]] = []

_start = {}


def pytest_sessionstart(session):
    _start["t"] = time.perf_counter()


@pytest.fixture
def record():
    def _record(criterion, passed, detail=""):
        ACCEPTANCE_LINES.append((criterion, bool(passed), detail))
        return passed

    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    elapsed = time.perf_counter() - _start.get("t", time.perf_counter())
    if not ACCEPTANCE_LINES:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for criterion, passed, detail in ACCEPTANCE_LINES:
        tr.write_line(f"{'PASS' if passed else 'FAIL'}  {criterion}  {detail}")
    ok = elapsed < SUITE_BUDGET_S
    tr.write_line(f"{'PASS' if ok else 'FAIL'}  suite-runtime  {elapsed:.1f}s (budget {SUITE_BUDGET_S:.0f}s)")


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - _start.get("t", time.perf_counter())
    if ACCEPTANCE_LINES and elapsed >= SUITE_BUDGET_S and session.exitstatus == 0:
        session.exitstatus = 1
