import pytest
from hypothesis import settings

from gaudin.rootsys import parse_datum

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def B2():
    return parse_datum("B", 2)


@pytest.fixture(scope="session")
def B3():
    return parse_datum("B", 3)


@pytest.fixture(scope="session")
def C3():
    return parse_datum("C", 3)


@pytest.fixture(scope="session")
def D4():
    return parse_datum("D", 4)
