import pytest

from rootforge import HermitianMarking, family_system


@pytest.fixture(scope="session")
def e6():
    return family_system("E", 6)


@pytest.fixture(scope="session")
def e7():
    return family_system("E", 7)


@pytest.fixture(scope="session")
def e6_marked(e6):
    return HermitianMarking(system=e6, nc_index=0)


@pytest.fixture(scope="session")
def e7_marked(e7):
    return HermitianMarking(system=e7, nc_index=0)


def unit(n, i):
    return tuple(1 if j == i else 0 for j in range(n))
