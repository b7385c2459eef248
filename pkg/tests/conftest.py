"""Pytest configuration and fixtures"""
import random

import pytest

from fedder_dp1 import config as config_module
from fedder_dp1.fields import make_field
from fedder_dp1.mpoly import parse_poly

ENV_VARS = ("FEDDER_SEED", "FEDDER_WORKERS", "FEDDER_PLANS", "FEDDER_LOG_JSON", "OTLP_ENDPOINT")


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    """Each test builds its own global config from the environment it sets up"""
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setattr(config_module, "_config", None)


@pytest.fixture
def f2():
    return make_field(2)


@pytest.fixture
def f3():
    return make_field(3)


@pytest.fixture
def f4():
    return make_field(2, 2)


@pytest.fixture
def f5():
    return make_field(5)


@pytest.fixture
def f9():
    return make_field(3, 2)


@pytest.fixture
def rng():
    """Seeded generator so randomized checks are reproducible"""
    return random.Random(20240611)


@pytest.fixture
def poly():
    """Parse text over a field with the s, t, x, y alphabet"""

    def _parse(text, field):
        return parse_poly(text, field)

    return _parse
