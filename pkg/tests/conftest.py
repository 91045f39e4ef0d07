import pytest

from atkit.convexity import build_oracle
from atkit.corpus import generate_corpus
from atkit.io import fixtures


@pytest.fixture(scope="session")
def fx():
    return fixtures()


@pytest.fixture(scope="session")
def oracle_of():
    cache = {}

    def get(g):
        if g not in cache:
            cache[g] = build_oracle(g)
        return cache[g]

    return get


@pytest.fixture(scope="session")
def small_atfree():
    return generate_corpus(7, (4, 7), 40, "atfree")


@pytest.fixture(scope="session")
def small_any():
    return generate_corpus(11, (4, 7), 60, "any")
