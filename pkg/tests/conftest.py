import pytest

from stringalg import load_fixture

_CACHE = {}


def algebra(name):
    if name not in _CACHE:
        _CACHE[name] = load_fixture(name)
    return _CACHE[name]


@pytest.fixture(scope="session")
def lambda2():
    return algebra("lambda2")


@pytest.fixture(scope="session")
def gp23():
    return algebra("gp23")


@pytest.fixture(scope="session")
def nontf():
    return algebra("nontf")


@pytest.fixture(scope="session")
def ex333():
    return algebra("ex333")


@pytest.fixture(scope="session")
def fig2_omega():
    return algebra("fig2_omega")


@pytest.fixture(scope="session")
def fig2_omega_plus_one():
    return algebra("fig2_omega_plus_one")


@pytest.fixture(scope="session")
def fig2_omega_plus_two():
    return algebra("fig2_omega_plus_two")


@pytest.fixture(scope="session")
def single_arrow():
    return algebra("single_arrow")
