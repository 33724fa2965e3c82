import pytest
from hypothesis import HealthCheck, settings

from properindex import available_backends

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(params=available_backends())
def backend(request):
    return request.param
