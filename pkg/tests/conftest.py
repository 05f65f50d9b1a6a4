import pytest

from hyphor.orthoscheme import build_scheme, realize


@pytest.fixture(scope="session")
def f736():
    return realize(build_scheme(7, 3, 6))


@pytest.fixture(scope="session")
def f544():
    return realize(build_scheme(5, 4, 4))
