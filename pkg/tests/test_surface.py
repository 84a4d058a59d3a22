import pytest
from hypothesis import given, strategies as st

from combcomplex import (
    Complex2, NotASurfaceError, OrientationChoice, OrientedFace, euler_characteristic,
    find_coherent_orientation, is_closed_surface, is_coherent, is_combinatorial_circle,
    is_combinatorial_disc, is_combinatorial_sphere, is_combinatorial_surface, is_orientable,
    make_complex, recognize,
)
from combcomplex.generators import polygon_double, random_sphere
from combcomplex.surface import boundary_cycle, link_components

from conftest import loop_sphere, projective_plane, square_disc, torus, triangle_face
from oracles import closed_surface_oracle


class TestCircle:
    def test_loop(self):
        assert is_combinatorial_circle(make_complex(1, [(0, 0)], dim=1))

    def test_path(self):
        assert not is_combinatorial_circle(make_complex(3, [(0, 1), (1, 2)], dim=1))

    def test_two_triangles(self):
        edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
        assert not is_combinatorial_circle(make_complex(6, edges, dim=1))

    def test_faces_rejected(self, tet):
        with pytest.raises(Exception):
            is_combinatorial_circle(tet)


class TestClosedSurface:
    def test_tetrahedron(self, tet):
        assert is_closed_surface(tet)

    def test_lone_triangle(self):
        assert not is_closed_surface(triangle_face())

    def test_wedge_of_spheres(self, tet):
        # glue vertex 0 of one tetrahedron to vertex 0 of another
        e2 = {e + 6: (0 if a == 0 else a + 3, 0 if b == 0 else b + 3) for e, (a, b) in tet.edges.items()}
        f2 = {f + 4: tuple(x + 12 for x in w) for f, w in tet.faces.items()}
        c = Complex2(tuple(range(7)), {**tet.edges, **e2}, {**tet.faces, **f2}, 2)
        assert not is_closed_surface(c)
        assert link_components(c)[0] == 2
        assert not closed_surface_oracle(c)


class TestSphereDisc:
    @pytest.mark.parametrize("n", [1, 2, 3, 7])
    def test_polygon_double(self, n):
        assert is_combinatorial_sphere(polygon_double(n).complex)

    def test_square_disc(self):
        c = square_disc()
        assert is_combinatorial_disc(c) and not is_combinatorial_sphere(c)

    def test_torus(self):
        c = torus()
        assert euler_characteristic(c) == 0
        assert is_closed_surface(c) and not is_combinatorial_sphere(c)

    def test_projective_plane(self):
        c = projective_plane()
        assert is_closed_surface(c) and not is_combinatorial_sphere(c)

    def test_recognize(self, tet):
        assert recognize(tet) == (False, True, True, True, False)
        assert recognize(square_disc()) == (False, False, True, False, True)

    def test_annulus_not_disc(self):
        # two squares around a cylinder: boundary is two circles, chi = 0
        c = make_complex(4, [(0, 1), (2, 3), (0, 2), (1, 3)], [(0, 6, 3, 5), (1, 4, 2, 7)])
        assert is_combinatorial_surface(c)
        assert not is_combinatorial_disc(c)


class TestBoundaryCycle:
    def test_as_stored_and_reversed(self):
        c = triangle_face()
        cyc = boundary_cycle(c, OrientedFace(0))
        assert cyc.steps == (0, 2, 4)
        assert boundary_cycle(c, OrientedFace(0, True)) == cyc.inverse()

    def test_loop_sphere(self):
        c = loop_sphere()
        theta = find_coherent_orientation(c)
        a = theta.contour(c, 0)
        b = theta.contour(c, 1)
        assert a == b.inverse()


class TestOrientation:
    def test_tetrahedron(self, tet):
        theta = find_coherent_orientation(tet)
        assert theta is not None and is_coherent(tet, theta)
        assert not any(theta.flags.values())

    def test_flipped_walk(self, tet):
        faces = dict(tet.faces)
        faces[2] = tuple(x ^ 1 for x in reversed(faces[2]))
        c = Complex2(tet.vertices, tet.edges, faces, 2)
        theta = find_coherent_orientation(c)
        assert theta is not None and theta[2] and not theta[0]

    def test_projective_plane(self):
        assert find_coherent_orientation(projective_plane()) is None
        assert not is_orientable(projective_plane())

    def test_not_a_surface(self):
        c = make_complex(2, [(0, 1)], dim=1)
        with pytest.raises(NotASurfaceError):
            find_coherent_orientation(c)

    def test_disc_orientable(self):
        assert is_orientable(square_disc())

    def test_torus_orientable(self):
        assert is_orientable(torus())


@given(st.integers(0, 5000), st.integers(0, 60))
def test_generated_spheres(seed, n_ops):
    m, _ = random_sphere(seed, n_ops)
    c = m.complex
    assert is_combinatorial_sphere(c)
    assert euler_characteristic(c) == 2
    assert closed_surface_oracle(c)
    theta = find_coherent_orientation(c)
    assert is_coherent(c, theta) and is_coherent(c, theta.flipped())
    assert sum(len(w) for w in c.faces.values()) == 2 * c.n_edges
    one_flipped = OrientationChoice({**theta.flags, 0: not theta[0]})
    assert len(c.faces) == 1 or not is_coherent(c, one_flipped)
