import pytest
from hypothesis import HealthCheck, settings

from ultranorm import LaurentQt, PAdicQ, TrivialQ

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

FIELDS = [TrivialQ, PAdicQ(2), PAdicQ(3), LaurentQt]
VALUED_FIELDS = [PAdicQ(2), PAdicQ(3), LaurentQt]


@pytest.fixture(params=FIELDS, ids=str)
def field(request):
    return request.param


@pytest.fixture(params=VALUED_FIELDS, ids=str)
def valued_field(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
