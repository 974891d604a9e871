import os

import pytest
from hypothesis import HealthCheck, settings

from modorder import lab
from modorder.algebra import ring_zn, regular_representation, zmodule
from modorder.orders import OrderContext

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("MODORDER_EXAMPLES", "40")),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

SMALL = ("zmod12", "zmod4", "zmod6", "zmod2x4", "ex3.7-z2", "m2z2", "z6", "zero")


@pytest.fixture(scope="session")
def ctx12():
    return lab.context("zmod12")


@pytest.fixture(scope="session")
def small_contexts():
    return {name: lab.context(name) for name in SMALL}


def fresh(M):
    return OrderContext(M)


@pytest.fixture
def z4():
    return zmodule([4])


@pytest.fixture
def z6_ring():
    return regular_representation(ring_zn(6))
