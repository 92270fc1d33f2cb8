import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from extshift.hypergraphs import UniformHypergraph, all_ksets
from extshift.permutations import Permutation

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def hypergraphs(draw, max_n=6, min_n=1):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(1, n))
    pool = all_ksets(n, k)
    faces = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=len(pool), unique=True))
    return UniformHypergraph(faces, n=n)


@st.composite
def permutations(draw, n):
    return Permutation(draw(st.permutations(range(1, n + 1))))


def random_hypergraph(rng: random.Random, n: int, k: int, size: int | None = None) -> UniformHypergraph:
    pool = all_ksets(n, k)
    size = size if size is not None else rng.randint(1, len(pool))
    return UniformHypergraph(rng.sample(pool, size), n=n)


@pytest.fixture
def rng():
    return random.Random(12345)
