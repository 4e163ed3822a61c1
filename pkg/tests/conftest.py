import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("repo", derandomize=True, deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

_CRITERIA: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def criterion():
    """Record the outcome of one acceptance criterion for the end-of-run summary."""

    def record(name: str, ok: bool, detail: str = ""):
        _CRITERIA[name] = (bool(ok), detail)
        print(f"[{'PASS' if ok else 'FAIL'}] {name} {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for name in sorted(_CRITERIA, key=lambda s: [int(t) if t.isdigit() else t for t in s.replace("(", " ").split()]):
        ok, detail = _CRITERIA[name]
        tr.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
