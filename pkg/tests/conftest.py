import pytest

from partizan_kayles import Oracle


@pytest.fixture(scope="session")
def oracle():
    # One memo shared across the whole run keeps exhaustive suites fast.
    return Oracle(bound=30)
