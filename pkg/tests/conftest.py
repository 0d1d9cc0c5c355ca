import pytest

from aisles.derived import Window
from aisles.kronecker import default_model
from aisles.quiver import d4_quiver, linear_quiver
from aisles.repcore import enumerate_indecomposables


@pytest.fixture(scope="session")
def a2_table():
    return enumerate_indecomposables(linear_quiver(2))


@pytest.fixture(scope="session")
def a3_table():
    return enumerate_indecomposables(linear_quiver(3))


@pytest.fixture(scope="session")
def d4_table():
    return enumerate_indecomposables(d4_quiver())


@pytest.fixture(scope="session")
def window():
    return Window(-2, 3)


@pytest.fixture(scope="session")
def tame_model():
    return default_model()
