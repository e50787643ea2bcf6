import pytest

from zesting.gallery import builtin


@pytest.fixture(scope="session")
def su3_3():
    return builtin("su3_3").category


@pytest.fixture(scope="session")
def su4_4():
    return builtin("su4_4").category


@pytest.fixture(scope="session")
def su4_2():
    return builtin("su4_2").category
