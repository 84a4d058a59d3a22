import random

from hypothesis import given, strategies as st

from combcomplex import (
    euler_characteristic, find_isomorphism, identity, iter_isomorphisms, make_complex, relabel,
    vertex_degree,
)
from combcomplex.generators import random_sphere


def cycle_graph(n):
    return make_complex(n, [(i, (i + 1) % n) for i in range(n)], dim=1)


def test_self_isomorphism(tet):
    phi = find_isomorphism(tet, tet)
    assert phi is not None and phi.is_isomorphism()


def test_identity_is_found(tet):
    assert identity(tet) in list(iter_isomorphisms(tet, tet))


def test_different_cycles():
    assert find_isomorphism(cycle_graph(3), cycle_graph(4)) is None


def test_tetrahedron_automorphism_count(tet):
    # the full symmetric group on four vertices
    assert len(list(iter_isomorphisms(tet, tet))) == 24


def test_cycle_automorphisms():
    assert len(list(iter_isomorphisms(cycle_graph(5), cycle_graph(5)))) == 10


def test_orientation_constraint(tet):
    theta = {f: False for f in tet.faces}
    kept = list(iter_isomorphisms(tet, tet, orientations=(theta, theta)))
    assert len(kept) == 12  # rotations only


def test_non_isomorphic_same_counts():
    a = make_complex(4, [(0, 1), (1, 2), (2, 3)], dim=1)           # path
    b = make_complex(4, [(0, 1), (0, 2), (0, 3)], dim=1)           # star
    assert find_isomorphism(a, b) is None


def test_isolated_vertices_and_free_edges():
    a = make_complex(5, [(0, 1), (1, 1)], dim=1)
    b = make_complex(5, [(3, 3), (4, 3)], dim=1)
    phi = find_isomorphism(a, b)
    assert phi is not None and phi.is_isomorphism()


def shuffled(c, rng):
    vs, es, fs = list(c.vertices), list(c.edges), list(c.faces)
    perm = lambda xs: dict(zip(xs, rng.sample(xs, len(xs))))
    flips = [e for e in es if rng.random() < 0.5]
    rot = {f: rng.randrange(len(c.faces[f])) for f in fs}
    return relabel(c, perm(vs), perm(es), perm(fs), flips, rot)


@given(st.integers(0, 3000), st.integers(0, 30))
def test_relabelled_spheres(seed, n_ops):
    c = random_sphere(seed, n_ops)[0].complex
    d = shuffled(c, random.Random(seed))
    phi = find_isomorphism(c, d)
    assert phi is not None and phi.is_isomorphism()
    assert euler_characteristic(c) == euler_characteristic(d)
    assert sorted(vertex_degree(c, v) for v in c.vertices) == sorted(
        vertex_degree(d, v) for v in d.vertices)
