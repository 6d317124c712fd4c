import pytest

from riccikit import families
from riccikit.graphs import Graph


@pytest.fixture(scope="session")
def k2():
    return families.complete(2)[0]


@pytest.fixture(scope="session")
def k3():
    return families.complete(3)[0]


@pytest.fixture(scope="session")
def c6():
    return families.cycle(6)[0]


@pytest.fixture(scope="session")
def path3():
    return Graph([(0, 1), (1, 2)])


@pytest.fixture(scope="session")
def k4_minus_edge():
    # complete on {0,1,2,3} without the 0-1 edge
    return Graph([(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture(scope="session")
def figure1_pair():
    return families.figure1()
