import numpy as np
import pytest

from finite_phase_space import LMGParams, build_kernels, initial_state, spectrum
from finite_phase_space.validation import random_density


@pytest.fixture(scope="session")
def lmg20():
    return spectrum(LMGParams(20, 1.5))


@pytest.fixture(scope="session")
def k21():
    return build_kernels(21)


@pytest.fixture(scope="session")
def rho_sym(lmg20):
    return initial_state(lmg20, 0, 1, 0.0)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def make_rho(rng):
    return lambda n, rank=None: random_density(n, rng, rank)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
