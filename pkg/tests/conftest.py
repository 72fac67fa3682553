import numpy as np
import pytest
from hypothesis import settings

from finite_triples import catalog, dirac

settings.register_profile("default", deadline=None, max_examples=30)
settings.load_profile("default")


@pytest.fixture
def cs3():
    return catalog.fixture("cs3_minimal").space()


@pytest.fixture
def cs3_dirac(cs3):
    return dirac.random_dirac(cs3, 7)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
