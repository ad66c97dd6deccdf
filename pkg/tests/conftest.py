"""Shared corpora for the test suite.

Session-scoped so the exhaustive and random graph families are generated
once; all randomness is seeded for reproducibility.
"""

from random import Random

import pytest

from f1zeta import corpus


@pytest.fixture(scope="session")
def corpus5():
    """Every loose graph with at most 5 ambient vertices."""
    return list(corpus.exhaustive_loose_graphs(5))


@pytest.fixture(scope="session")
def random200():
    """200 random loose graphs with at most 7 ambient vertices."""
    rng = Random(20260810)
    return [corpus.random_loose_graph(rng, max_ambient=7) for _ in range(200)]


@pytest.fixture(scope="session")
def loose_trees100():
    """100 random loose trees on up to 8 vertices with up to 3 loose edges."""
    rng = Random(424242)
    return [corpus.random_loose_tree(rng, max_vertices=8, max_loose=3) for _ in range(100)]
