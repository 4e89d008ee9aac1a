import numpy as np
import pytest

from layercast import build_graph


@pytest.fixture
def chain4():
    """The 4-node path A-B-C-D (nodes 0-3)."""
    return build_graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def star5():
    """Star with center 0 and four leaves."""
    return build_graph(5, [(0, i) for i in range(1, 5)])


@pytest.fixture
def k4():
    return build_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])


def random_edges(rng, n, p):
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.append((i, j))
    return edges


@pytest.fixture
def random_graph_factory():
    def make(seed, n, p):
        rng = np.random.default_rng(seed)
        edges = random_edges(rng, n, p)
        return build_graph(n, edges), edges

    return make
