import pytest

from orthocert import build_extremal_set


@pytest.fixture(scope="session")
def set8():
    return build_extremal_set(8)


@pytest.fixture(scope="session")
def set16():
    return build_extremal_set(16)
