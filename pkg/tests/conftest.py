import pytest

from coxforge.diller import six_maps_n5, solve_parameters
from coxforge.groupengine import build_context
from coxforge.intpoly import IntPolynomial
from coxforge.salem import LEHMER

PHI = IntPolynomial((1, -2, 1, -2, 1))


@pytest.fixture(scope="session")
def phi():
    return PHI


@pytest.fixture(scope="session")
def lehmer():
    return LEHMER


@pytest.fixture(scope="session")
def solution5():
    return solve_parameters(5)


@pytest.fixture(scope="session")
def maps5():
    return six_maps_n5()


@pytest.fixture(scope="session")
def ctx5():
    return build_context(5)
