import random

import pytest

from dubrovnik.skein import SkeinEngine

_CRITERIA: dict[int, str] = {}


@pytest.fixture
def criterion():
    """Record and print a one-line verdict, then assert it."""

    def report(number: int, ok: bool, detail: str = ""):
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else "")
        _CRITERIA[number] = line
        print(line)
        assert ok, line

    return report


@pytest.fixture
def engine():
    return SkeinEngine()


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        terminalreporter.write_line(_CRITERIA[n])
