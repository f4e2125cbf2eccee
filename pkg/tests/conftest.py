import random

import pytest
from hypothesis import HealthCheck, settings

from mrdcodes.field import FieldContext

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

_CACHE = {}


def field(p, l, n, s=1, l0=None):
    key = (p, l, n, s, l0)
    if key not in _CACHE:
        _CACHE[key] = FieldContext(p, l, n, s, l0=l0)
    return _CACHE[key]


@pytest.fixture
def rng():
    return random.Random(1234)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
