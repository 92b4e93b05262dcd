from fractions import Fraction

import pytest

from skewgrowth import builtin


@pytest.fixture(scope="session")
def example3_table():
    return builtin("example3").enumerate_up_to(Fraction(8))


@pytest.fixture(scope="session")
def braid3_table():
    return builtin("braid3").enumerate_up_to(Fraction(8))


@pytest.fixture(scope="session")
def free2_table():
    return builtin("free", count=2).enumerate_up_to(Fraction(8))


@pytest.fixture(scope="session")
def zpos_table():
    return builtin("zpos", nmax=30).enumerate_up_to(30)


@pytest.fixture(scope="session")
def mp_table():
    return builtin("mp", p=[4, 8, 16]).enumerate_up_to(Fraction(8))
