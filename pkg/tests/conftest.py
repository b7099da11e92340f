import random
import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from mucalc import library  # noqa: E402
from mucalc.complex import from_facets, standard_sphere  # noqa: E402

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture
def S24():
    return from_facets([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])


@pytest.fixture
def stacked5():
    return library.get("stacked5")


@pytest.fixture
def octahedron():
    return library.get("octahedron")


@pytest.fixture
def rp2():
    return library.get("rp2_6")


@pytest.fixture
def torus():
    return library.get("torus_7")


@pytest.fixture
def S35():
    return standard_sphere(3)


def random_facets(rng: random.Random, m: int, max_size: int = 4, count: int | None = None):
    """A random facet list on vertices 0..m-1 with every vertex used."""
    count = count or rng.randint(1, 2 * m)
    facets = [tuple(rng.sample(range(m), rng.randint(1, min(max_size, m)))) for _ in range(count)]
    used = {v for f in facets for v in f}
    facets += [(v,) for v in range(m) if v not in used]
    return facets


@st.composite
def complexes(draw, max_vertices=6, max_size=4):
    m = draw(st.integers(1, max_vertices))
    faces = draw(st.lists(st.sets(st.integers(0, m - 1), min_size=1, max_size=max_size),
                          min_size=1, max_size=2 * m))
    return from_facets([tuple(f) for f in faces])
