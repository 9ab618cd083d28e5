import pytest

from sntlogic import SampleSet


@pytest.fixture(scope="session")
def coarse():
    """Small sample set for tests that only need the shape of a result."""
    return SampleSet(grid_step=0.05, random_count=32, triple_grid_step=0.1)


@pytest.fixture(scope="session")
def exact_coarse():
    return SampleSet(grid_step=0.05, random_count=16, triple_grid_step=0.1, exact=True)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for i, (ok, detail) in sorted(mod.RESULTS.items()):
        terminalreporter.write_line(f"criterion {i}: {'PASS' if ok else 'FAIL'} - {detail}")
