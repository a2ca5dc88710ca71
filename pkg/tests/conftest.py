import random
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from relkit.equiv import random_relation  # noqa: E402
from relkit.linalg import unit, zero_vector  # noqa: E402
from relkit.relation import LinearRelation  # noqa: E402

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def e(i, n=3):
    return unit(i, n)


def z(n=3):
    return zero_vector(n)


@pytest.fixture
def example_relation():
    """span{(0,e1),(e1,e2),(e2,0),(e1,e3)} in Q^3."""
    return LinearRelation.from_pairs(3, [(z(), e(0)), (e(0), e(1)), (e(1), z()), (e(0), e(2))])


small_ints = st.integers(min_value=-2, max_value=2)


@st.composite
def raw_relations(draw, max_n=5):
    """Arbitrary relations from small integer pairs (often degenerate)."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    g = draw(st.integers(min_value=0, max_value=2 * n))
    vec = st.lists(small_ints, min_size=n, max_size=n)
    pairs = draw(st.lists(st.tuples(vec, vec), min_size=g, max_size=g))
    return LinearRelation.from_pairs(n, pairs)


@st.composite
def synthesized(draw, max_dim=8, profile="mixed"):
    """``(A, wc)`` with a known characteristic under a random basis change."""
    seed = draw(st.integers(min_value=0, max_value=10**6))
    return random_relation(random.Random(seed), max_dim, profile)
