import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
import hypothesis.strategies as st

from youngfock.partitions import partitions_of

settings.register_profile(
    "exact",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")


@st.composite
def partitions(draw, max_size: int = 8):
    n = draw(st.integers(min_value=0, max_value=max_size))
    plist = partitions_of(n)
    return plist[draw(st.integers(min_value=0, max_value=len(plist) - 1))]


small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=9)


@pytest.fixture
def rng():
    return random.Random(20240817)


def rand_q(rng, nonzero=False):
    while True:
        q = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if q or not nonzero:
            return q
