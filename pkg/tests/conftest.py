import pytest

from tieropt import load_bundled_scenario


@pytest.fixture(scope="session")
def ids_scenario():
    return load_bundled_scenario("ids")


@pytest.fixture(scope="session")
def suncatcher_scenario():
    return load_bundled_scenario("suncatcher")
