import pytest
from hypothesis import given, strategies as st

from combcomplex import (
    ComplexValidationError, ParseError, contiguity_graph, export_dot, find_isomorphism,
    find_map_isomorphism, make_complex, make_map, parse_arcs, parse_complex, parse_cycle,
    parse_map, random_sphere, serialize_complex, serialize_map,
)
from combcomplex.generators import arc_pool
from combcomplex.textio import serialize_arcs, serialize_cycle


def test_minimal():
    c = parse_complex("complex2\nvertex v")
    assert c.counts() == (1, 0, 0) and c.vertex_name(0) == "v"


def test_tetrahedron_fixture(fixtures_dir):
    c = parse_complex((fixtures_dir / "tetrahedron.c2x").read_text())
    assert c.counts() == (4, 6, 4)


def test_dangling_endpoint_names_line(fixtures_dir):
    with pytest.raises(ParseError) as info:
        parse_complex((fixtures_dir / "dangling.c2x").read_text())
    assert info.value.line == 5 and info.value.col == 11


@pytest.mark.parametrize("text, line", [
    ("vertex v", 1),
    ("complex2\nvertex v\nvertex v", 3),
    ("complex2\nvertex v\nedge e v v\nface f e+", 4),
    ("complex2\nvertex v\nedge e v v\nface f = e*", 4),
    ("complex2\nvertex v\nbogus", 3),
    ("complex2\nvertex v\nedge e v v\nface f = x+", 4),
])
def test_syntax_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_complex(text)
    assert info.value.line == line


def test_semantic_errors():
    text = "complex2\nvertex a\nvertex b\nedge e a b\nface f = e+"
    with pytest.raises(ComplexValidationError) as info:
        parse_complex(text)
    assert info.value.violations[0].rule == "broken walk"
    with pytest.raises(ComplexValidationError):
        parse_complex("complex2\n# nothing")


def test_comments_and_blank_lines():
    text = "# header next\n\ncomplex2  # the header\nvertex v # one\nedge e v v\n"
    assert parse_complex(text).counts() == (1, 1, 0)


def test_map_fixture(fixtures_dir):
    m = parse_map((fixtures_dir / "tetrahedron_disc.map").read_text())
    assert len(m.contours) == 1 and m.complex.n_faces == 3
    cyc = parse_cycle((fixtures_dir / "abc_cycle.cyc").read_text(), m.complex)
    assert cyc == m.face_contour(0).inverse()


def test_trivial_map_round_trip():
    m = parse_map("complex2\nvertex v\ncontour =\n")
    assert m.is_trivial
    assert parse_map(serialize_map(m)).is_trivial


def test_arcs(tet):
    (arc,) = parse_arcs("arc = ab+\n", tet)
    assert arc.path.steps == (0,)
    assert parse_arcs(serialize_arcs(tet, [arc]), tet) == [arc]


def test_cycle_round_trip(tet):
    from combcomplex.paths import face_cycle
    cyc = face_cycle(tet, 2)
    assert parse_cycle(serialize_cycle(tet, cyc), tet) == cyc


def test_serialize_is_stable(tet):
    text = serialize_complex(tet)
    assert serialize_complex(parse_complex(text)) == text


@given(st.integers(0, 10_000), st.integers(0, 40))
def test_round_trip_generated(seed, n_ops):
    m, _ = random_sphere(seed, n_ops)
    text = serialize_map(m)
    back = parse_map(text)
    assert back.complex == m.complex
    assert serialize_map(back) == text
    assert find_map_isomorphism(back, m) is not None
    holed = make_map(m, [0])
    again = parse_map(serialize_map(holed))
    assert find_map_isomorphism(again, holed) is not None
    arcs = arc_pool(m.complex)[:3]
    assert parse_arcs(serialize_arcs(m.complex, arcs), m.complex) == sorted(arcs)


def test_name_clash_is_disambiguated():
    from combcomplex import Complex2, Names
    c = Complex2((0, 1), {}, {}, 0, Names({0: "v1"}))
    back = parse_complex(serialize_complex(c))
    assert back.counts() == (2, 0, 0)
    assert find_isomorphism(back, c) is not None


class TestDot:
    def test_single_vertex(self):
        text = export_dot(make_complex(1))
        assert text.count("label") == 1 and "--" not in text

    def test_k4(self, tet):
        text = export_dot(contiguity_graph(tet))
        assert text.count("[label") == 10 and text.count(" -- ") == 6
        assert '"abc"' in text

    def test_deterministic(self, tet):
        assert export_dot(contiguity_graph(tet)) == export_dot(contiguity_graph(tet))

    def test_rejects_faces(self, tet):
        with pytest.raises(Exception):
            export_dot(tet)
