import random

import pytest
from hypothesis import given, strategies as st

from combcomplex import (
    InvalidArcSystemError, check_arc_system, check_planar_bound, contiguity_graph,
    estimating_complex, euler_characteristic, factor_boundary, find_isomorphism,
    is_combinatorial_sphere, is_connected, make_complex, relabel, validate_arc_system,
)
from combcomplex.analysis import NotASphereError, NotSimpleGraphError, estimating_violations
from combcomplex.core import ComplexError, vertex_partition
from combcomplex.generators import polygon_double, random_arc_system, random_sphere
from combcomplex.paths import ArcRec, arc_from_darts, path_from_darts

from conftest import cube, dumbbell_sphere, square_disc


class TestContiguity:
    def test_tetrahedron_k4(self, tet):
        res = contiguity_graph(tet)
        assert res.graph.counts() == (4, 6, 0)
        assert sorted(res.graph.vertex_name(v) for v in res.graph.vertices) == [
            "abc", "abd", "acd", "bcd"]

    def test_one_face(self, tet):
        assert contiguity_graph(tet, [2]).graph.counts() == (1, 0, 0)

    def test_polygon_double(self):
        res = contiguity_graph(polygon_double(3).complex)
        assert res.graph.counts() == (2, 1, 0)
        assert res.pair_of_edge[0] == frozenset({0, 1})

    def test_empty(self, tet):
        with pytest.raises(ComplexError):
            contiguity_graph(tet, [])

    def test_adjacency_means_shared_edge(self):
        c = cube()
        res = contiguity_graph(c)
        for k, pair in res.pair_of_edge.items():
            f, g = sorted(pair)
            assert {x >> 1 for x in c.faces[f]} & {x >> 1 for x in c.faces[g]}
        assert res.graph.n_edges == 12  # opposite faces are not contiguous


class TestPlanarBound:
    def test_k4(self, tet):
        b = check_planar_bound(contiguity_graph(tet).graph)
        assert b.holds and (b.n_vertices, b.n_edges) == (4, 6) and b.strong

    def test_single_vertex(self):
        b = check_planar_bound(make_complex(1))
        assert b.holds and b.n_edges == 0 and b.strong is None

    def test_rejects_loops(self):
        with pytest.raises(NotSimpleGraphError):
            check_planar_bound(make_complex(1, [(0, 0)], dim=1))

    def test_rejects_multi_edges(self):
        with pytest.raises(NotSimpleGraphError):
            check_planar_bound(make_complex(2, [(0, 1), (1, 0)], dim=1))


@given(st.integers(0, 10_000), st.integers(0, 80), st.data())
def test_contiguity_of_generated_spheres(seed, n_ops, data):
    c = random_sphere(seed, n_ops)[0].complex
    full = contiguity_graph(c)
    assert is_connected(full.graph)
    b = check_planar_bound(full.graph)
    assert b.holds and b.strong in (True, None)
    part = data.draw(st.sets(st.sampled_from(sorted(c.faces)), min_size=1))
    assert check_planar_bound(contiguity_graph(c, part).graph).holds


class TestArcSystems:
    def test_single_edge(self, tet):
        sys_ = validate_arc_system(tet, [arc_from_darts(tet, [0])])
        assert len(sys_.arcs) == 1

    def test_overlap(self):
        c = polygon_double(4).complex
        a = arc_from_darts(c, [0, 2])
        b = arc_from_darts(c, [2, 4])
        assert [v.rule for v in check_arc_system(c, [a, b])] == ["overlap"]

    def test_chain_condition(self):
        c = cube()
        top = arc_from_darts(c, [8])        # on the top and front faces
        bottom = arc_from_darts(c, [4])     # on the bottom and the 2-3-7-6 face
        with pytest.raises(InvalidArcSystemError) as info:
            validate_arc_system(c, [top, bottom])
        assert [v.rule for v in info.value.violations] == ["chain condition"]

    def test_not_an_arc(self, tet):
        bent = ArcRec(path_from_darts(tet, [0, 6]))   # b has degree 3
        assert [v.rule for v in check_arc_system(tet, [bent])] == ["not an arc"]

    def test_empty(self, tet):
        assert [v.rule for v in check_arc_system(tet, [])] == ["empty"]

    def test_needs_sphere(self):
        d = square_disc()
        with pytest.raises(NotASphereError):
            validate_arc_system(d, [arc_from_darts(d, [0])])


class TestFactor:
    def test_whole_boundary_is_an_arc(self):
        c = polygon_double(3).complex
        sys_ = validate_arc_system(c, [arc_from_darts(c, [0, 2, 4])])
        fac = factor_boundary(c, 0, sys_)
        assert len(fac.arcs) == 1
        assert all(x.is_trivial for x in fac.runs)

    def test_tetrahedron_face(self, tet):
        sys_ = validate_arc_system(tet, [arc_from_darts(tet, [0])])
        fac = factor_boundary(tet, 0, sys_)
        assert fac.arcs == ((0, False),)
        assert [len(x) for x in fac.runs] == [0, 2]
        fac1 = factor_boundary(tet, 1, sys_)
        assert fac1.arcs == ((0, True),)

    def test_arc_traversed_both_ways(self):
        c = dumbbell_sphere()
        sys_ = validate_arc_system(c, [arc_from_darts(c, [8])])
        fac = factor_boundary(c, 0, sys_)
        assert sorted(fac.arcs) == [(0, False), (0, True)]

    def test_face_off_the_system(self, tet):
        sys_ = validate_arc_system(tet, [arc_from_darts(tet, [0])])
        with pytest.raises(ComplexError):
            factor_boundary(tet, 3, sys_)


class TestEstimating:
    def test_tetrahedron_one_arc(self, tet):
        res = estimating_complex(validate_arc_system(tet, [arc_from_darts(tet, [0])]))
        assert res.phi.counts() == (1, 1, 2)
        assert euler_characteristic(res.phi) == 2
        assert res.phi.is_loop(0)

    def test_polygon_double_one_edge(self):
        c = polygon_double(3).complex
        sys_ = validate_arc_system(c, [arc_from_darts(c, [0])])
        res = estimating_complex(sys_)
        assert res.faces == (0, 1)
        assert res.phi.counts() == (1, 1, 2)
        assert is_combinatorial_sphere(res.phi)

    def test_dumbbell(self):
        c = dumbbell_sphere()
        res = estimating_complex(validate_arc_system(c, [arc_from_darts(c, [8])]))
        assert res.phi.counts() == (2, 1, 1)
        assert sorted(map(sorted, res.components)) == [[0, 1, 2, 3], [4]]

    def test_figure_one_counts(self):
        assert 17 - 25 + 10 == 2

    def test_isolated_end_vertex_is_a_component(self):
        c = dumbbell_sphere()
        res = estimating_complex(validate_arc_system(c, [arc_from_darts(c, [8])]))
        assert frozenset({4}) in res.components


@given(st.integers(0, 10_000), st.integers(1, 60))
def test_estimating_properties(seed, n_ops):
    d = random_sphere(seed, n_ops)[0].complex
    rng = random.Random(seed)
    sys_ = validate_arc_system(d, random_arc_system(d, rng))
    res = estimating_complex(sys_)
    phi = res.phi
    assert is_combinatorial_sphere(phi) and euler_characteristic(phi) == 2
    assert phi.n_edges == len(sys_.arcs)
    assert phi.n_faces == len(res.faces)
    assert sum(len(w) for w in phi.faces.values()) == 2 * len(sys_.arcs)
    assert not estimating_violations(res, sys_)

    # uniqueness: a relabelled copy of the input gives an isomorphic phi
    perm = lambda xs: dict(zip(xs, rng.sample(xs, len(xs))))
    vm, em, fm = perm(list(d.vertices)), perm(list(d.edges)), perm(list(d.faces))
    d2 = relabel(d, vm, em, fm)
    arcs2 = [ArcRec.of(path_from_darts(d2, [2 * em[x >> 1] + (x & 1) for x in a.path.steps]))
             for a in sys_.arcs]
    res2 = estimating_complex(validate_arc_system(d2, arcs2))
    assert find_isomorphism(phi, res2.phi) is not None
    assert len(vertex_partition(phi)) == 1
