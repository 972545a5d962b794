from fractions import Fraction

import pytest

from griesskit import griess, lattice


@pytest.fixture(scope="session")
def alg31():
    return griess.build(3, 1)


@pytest.fixture(scope="session")
def alg32():
    return griess.build(3, 2)


@pytest.fixture(scope="session")
def alg41():
    return griess.build(4, 1)


@pytest.fixture(scope="session")
def ising3():
    return lattice.ising_family(3)


@pytest.fixture(scope="session")
def ising4():
    return lattice.ising_family(4)


@pytest.fixture(scope="session")
def tilde3():
    return lattice.tilde_family(3)


@pytest.fixture
def F():
    return Fraction
