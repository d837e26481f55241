import pytest

from bchbound.galois import build_field, nth_root, root_from_x


@pytest.fixture(scope="session")
def root15():
    return root_from_x(build_field(2, 4, (1, 1, 0, 0, 1)), 15)


@pytest.fixture(scope="session")
def root21():
    return root_from_x(build_field(2, 6, (1, 0, 1, 0, 1, 1, 1)), 21)


@pytest.fixture(scope="session")
def root17():
    return root_from_x(build_field(2, 8, (1, 1, 1, 0, 1, 0, 1, 1, 1)), 17)


@pytest.fixture(scope="session")
def root7():
    return nth_root(build_field(2, 3), 7)


@pytest.fixture(scope="session")
def root11_3():
    return nth_root(build_field(3, 5), 11)
