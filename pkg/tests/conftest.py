import pytest

from ppmod.fields import GF
from ppmod.algebra import kronecker_algebra, truncated_dvr

F2 = GF(2)


@pytest.fixture(scope="session")
def dvr2():
    return truncated_dvr(2, F2)


@pytest.fixture(scope="session")
def dvr3():
    return truncated_dvr(3, F2)


@pytest.fixture(scope="session")
def kron():
    return kronecker_algebra(F2)
