import math
import sys

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("gordon", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("gordon")


def rel_diff(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


@pytest.fixture
def rel():
    return rel_diff


def close(a, b, rtol, atol=0.0):
    return abs(a - b) <= max(rtol * max(abs(a), abs(b)), atol) or (math.isnan(a) and math.isnan(b))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for num in sorted(results):
            terminalreporter.write_line(results[num])
