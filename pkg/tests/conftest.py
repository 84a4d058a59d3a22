from pathlib import Path

import pytest
from hypothesis import settings

from combcomplex import make_complex, parse_complex

FIXTURES = Path(__file__).parent / "fixtures"

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def tetrahedron():
    """Vertices 0..3; edges 01 02 03 12 13 23; faces as stored in the fixture file."""
    return parse_complex((FIXTURES / "tetrahedron.c2x").read_text())


def triangle_face():
    return make_complex(3, [(0, 1), (1, 2), (2, 0)], [(0, 2, 4)])


def square_disc():
    return make_complex(4, [(0, 1), (1, 2), (2, 3), (3, 0)], [(0, 2, 4, 6)])


def loop_sphere():
    """One vertex, one loop, two faces glued along it."""
    return make_complex(1, [(0, 0)], [(0,), (1,)])


def projective_plane():
    return make_complex(1, [(0, 0)], [(0, 0)])


def torus():
    # square with sides a b a^-1 b^-1
    return make_complex(1, [(0, 0), (0, 0)], [(0, 2, 1, 3)])


def cube():
    """Vertices 0-3 on the bottom square, 4-7 above them."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
             (0, 4), (1, 5), (2, 6), (3, 7)]
    faces = [
        (7, 5, 3, 1),          # bottom 0-3-2-1
        (8, 10, 12, 14),       # top 4-5-6-7
        (0, 18, 9, 17),        # front 0-1-5-4
        (2, 20, 11, 19),       # 1-2-6-5
        (4, 22, 13, 21),       # 2-3-7-6
        (6, 16, 15, 23),       # 3-0-4-7
    ]
    return make_complex(8, edges, faces)


def dumbbell_sphere():
    return make_complex(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)],
                        [(0, 2, 4, 6, 8, 9), (7, 5, 3, 1)])


@pytest.fixture
def tet():
    return tetrahedron()


@pytest.fixture
def fixtures_dir():
    return FIXTURES
