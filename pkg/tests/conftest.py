import numpy as np
import pytest

from poisson_sinr import NetworkConfig


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def small_config():
    return NetworkConfig(half_isd_Rc=100.0, eta=3.0, n_runs=20, ue_grid_count=50, seed=7)


_criteria = []


@pytest.fixture
def criterion():
    """Record one acceptance line: ``criterion(number, passed, detail)``."""
    def record(number, passed, detail):
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {detail}"
        _criteria.append((number, line))
        print(line)
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_criteria):
            terminalreporter.write_line(line)
