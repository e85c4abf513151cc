import pytest
from hypothesis import HealthCheck, settings

from eaqmds.field import create_field, field_for_q

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def gf9():
    return create_field(3, 2)


@pytest.fixture(scope="session")
def gf25():
    return field_for_q(5)


@pytest.fixture(scope="session")
def gf169():
    return field_for_q(13)
