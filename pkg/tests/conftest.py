import numpy as np
import pytest

from nkappa import Tolerance, load_fixture
from nkappa.sampling import sample_points


def q_example2(z):
    return -np.array([[0, 1 / z], [1 / z, 1 / z**2]])


def q_example4(z):
    return np.array([[-(1 + z) / z**2, 1 / z], [1 / z, 1 / (1 + z)]])


def qhat1_example4(z):
    return np.array([[(-1 + z) / 2, -z / 2], [-z / 2, -(1 + z) / 2]])


def qhat2_example4(z):
    return np.array([[1 / (2 * (1 + z)), 0], [0, 0]])


def qhat_example2(z):
    # -Q(z)^{-1} with Q(z)^{-1} = [[1, -z], [-z, 0]]
    return -np.array([[1, -z], [-z, 0]])


@pytest.fixture
def ex2():
    return load_fixture("example2")


@pytest.fixture
def ex4():
    return load_fixture("example4")


@pytest.fixture
def tol():
    return Tolerance()


@pytest.fixture
def points():
    # spectrum of both examples and of the inverse resolvent parts is {0, -1}
    return sample_points(10, seed=7, exclude=[0, -1])


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
