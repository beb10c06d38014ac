import random
from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from linewidth.decompositions import SUBJECT_LINE, TreeDecomposition
from linewidth.graphs import Graph

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_vertices=1, max_vertices=6, min_edges=0):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(combinations(range(1, n + 1), 2))
    available = len(pairs)
    if available == 0:
        return Graph(n)
    lo = min(min_edges, available)
    m = draw(st.integers(lo, available))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    return Graph(n, rng.sample(pairs, m))


def retag_line(td: TreeDecomposition) -> TreeDecomposition:
    """Reinterpret a decomposition computed on L(g) itself as an of-L(g)
    decomposition for g (the vertex ids of L are g's edge ids)."""
    return TreeDecomposition(td.nodes, td.tree_edges, td.bags, SUBJECT_LINE)


@pytest.fixture(scope="session")
def rng():
    return random.Random(20240817)
