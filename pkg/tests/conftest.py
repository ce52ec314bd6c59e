import pytest
from hypothesis import HealthCheck, settings

from artifact import AutomorphismSpec, RingContext

settings.register_profile(
    "suite",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def ctx1():
    return RingContext(1, (1, 1))


@pytest.fixture(scope="session")
def ctx2():
    return RingContext(2, (1, 1, 1))


@pytest.fixture(scope="session")
def ctx3():
    return RingContext(3, (3, 1, 2, 1))


@pytest.fixture(scope="session")
def autom1(ctx1):
    return AutomorphismSpec(ctx1, 1)


@pytest.fixture(scope="session")
def autom2(ctx2):
    return AutomorphismSpec(ctx2, 1)


@pytest.fixture(scope="session")
def autom3(ctx3):
    return AutomorphismSpec(ctx3, 1)
