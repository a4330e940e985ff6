import pytest

import helpers


@pytest.fixture
def hetero():
    """5 nodes, 6 packets, asymmetric capacities (4,3,2,2,2)."""
    return helpers.hetero_code()


@pytest.fixture
def k4():
    """The complete-graph code: 4 nodes, 6 packets, each on 2 nodes."""
    return helpers.k4_code()


@pytest.fixture
def triangle():
    """3 nodes, 3 packets, pairwise single sharing."""
    return helpers.triangle_code()
