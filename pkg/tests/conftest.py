import pytest
from hypothesis import HealthCheck, settings

from core import patterns
from core.graph import square

settings.register_profile("sqroot", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("sqroot")


@pytest.fixture
def p5():
    return patterns.path(5)


@pytest.fixture
def p5_squared(p5):
    return square(p5)


@pytest.fixture
def pseudo_p5_root():
    return patterns.pseudo_p5_example()


@pytest.fixture
def dh_root():
    return patterns.distance_hereditary_example()


@pytest.fixture
def dh_square():
    return patterns.distance_hereditary_example_square()
