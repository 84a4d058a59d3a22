"""Maps: oriented spheres with some faces removed and their contours kept.

A map remembers the contours of its removed faces with the orientation they
had in the sphere, so the sphere can be rebuilt by gluing one face back
along each contour.  Contours of submaps are found by tracing the faces of
the induced embedding: the rotation at each vertex is read off the oriented
faces of the closing sphere and restricted to the kept edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from .core import (
    Complex2, ComplexError, Morphism, Names, inclusion, is_connected, validate_complex,
)
from .isomorphism import find_isomorphism
from .paths import (
    ArcRec, CycleClass, PathSeq, classify_cycle, incident_faces, invert, subpath_of_cycle,
    trivial_cycle,
)
from .surface import (
    OrientationChoice, find_coherent_orientation, is_coherent, is_combinatorial_disc,
    is_combinatorial_sphere, is_combinatorial_circle, oriented_walk,
)


class InvalidMapError(ComplexError):
    pass


class InvariantError(ComplexError):
    """A property that must hold for every valid input failed."""


@dataclass(frozen=True)
class MapStruct:
    complex: Complex2
    orientation: OrientationChoice = field(default_factory=OrientationChoice)
    contours: Tuple[CycleClass, ...] = ()

    @property
    def kind(self) -> str:
        if not self.contours:
            return "spherical"
        if not self.complex.edges and not self.complex.faces:
            return "trivial"
        return "nontrivial"

    @property
    def is_spherical(self) -> bool:
        return self.kind == "spherical"

    @property
    def is_trivial(self) -> bool:
        return self.kind == "trivial"

    @property
    def is_degenerate(self) -> bool:
        return not self.complex.faces

    def face_contour(self, f: int) -> CycleClass:
        return self.orientation.contour(self.complex, f)


class ClosureResult(NamedTuple):
    sphere: MapStruct
    embedding: Morphism
    improper_faces: Tuple[int, ...]


def _sorted_contours(cycles: Iterable[CycleClass]) -> Tuple[CycleClass, ...]:
    return tuple(sorted(cycles))


def spherical_map(c: Complex2, orientation: Optional[OrientationChoice] = None) -> MapStruct:
    """Wrap an oriented combinatorial sphere as a spherical map."""
    if not is_combinatorial_sphere(c):
        raise InvalidMapError("complex is not a combinatorial sphere")
    if orientation is None:
        orientation = find_coherent_orientation(c)
    elif not is_coherent(c, orientation):
        raise InvalidMapError("orientation is not coherent")
    return MapStruct(c, orientation.restrict(c.faces), ())


def trivial_map(v: int = 0, names: Optional[Names] = None) -> MapStruct:
    c = Complex2((v,), {}, {}, 2, names or Names())
    return MapStruct(c, OrientationChoice({}), (trivial_cycle(v),))


def make_map(closure: MapStruct, removed: Iterable[int]) -> MapStruct:
    """Remove faces from a spherical map, keeping their contours."""
    if not closure.is_spherical:
        raise InvalidMapError("expected a spherical map")
    c = closure.complex
    gone = sorted(set(removed))
    for f in gone:
        if f not in c.faces:
            raise InvalidMapError(f"unknown face {f}")
    if not gone:
        return closure
    contours = [closure.face_contour(f) for f in gone]
    sub = c.without_faces(gone)
    if not sub.edges:
        return trivial_map(sub.vertices[0], sub.names)
    return MapStruct(sub, closure.orientation.restrict(sub.faces), _sorted_contours(contours))


def spherical_closure(m: MapStruct) -> ClosureResult:
    """Glue one face back along every contour."""
    if m.is_trivial:
        raise InvalidMapError("a trivial map has no spherical closure")
    c = m.complex
    if m.is_spherical:
        return ClosureResult(m, inclusion(c, c), ())
    faces = dict(c.faces)
    flags = dict(m.orientation.flags)
    nxt = max(faces, default=-1) + 1
    improper = []
    face_names = dict(c.names.face)
    taken = set(face_names.values())
    for cyc in m.contours:
        if cyc.is_trivial:
            raise InvalidMapError("trivial contour in a nontrivial map")
        faces[nxt] = cyc.steps
        flags[nxt] = False
        k = len(improper)
        while f"hole{k}" in taken:
            k += 1
        face_names[nxt] = f"hole{k}"
        taken.add(face_names[nxt])
        improper.append(nxt)
        nxt += 1
    sphere_c = Complex2(c.vertices, dict(c.edges), faces, 2,
                        Names(dict(c.names.vertex), dict(c.names.edge), face_names))
    theta = OrientationChoice(flags)
    if not validate_complex(sphere_c).ok or not is_combinatorial_sphere(sphere_c):
        raise InvalidMapError("contours do not close the map into a sphere")
    if not is_coherent(sphere_c, theta):
        raise InvalidMapError("contours are not coherent with the face orientations")
    sphere = MapStruct(sphere_c, theta, ())
    return ClosureResult(sphere, inclusion(c, sphere_c), tuple(improper))


def closing_sphere(m: MapStruct) -> MapStruct:
    return spherical_closure(m).sphere


# -- induced structure -------------------------------------------------------


def _face_successor(sphere: MapStruct) -> Dict[int, int]:
    nxt = {}
    c = sphere.complex
    for f in c.faces:
        walk = oriented_walk(c, sphere.orientation.oriented(f))
        n = len(walk)
        for i, x in enumerate(walk):
            nxt[x] = walk[(i + 1) % n]
    return nxt


def trace_contours(sphere: MapStruct, edges: Iterable[int], faces: Iterable[int]) -> List[CycleClass]:
    """Contours of the subcomplex spanned by ``edges`` and ``faces`` of a spherical map."""
    c = sphere.complex
    kept = set(edges)
    kept_faces = set(faces)
    phi = _face_successor(sphere)

    def rotate(x):  # next kept dart around tail(x)
        y = phi[x ^ 1]
        while (y >> 1) not in kept:
            y = phi[y ^ 1]
        return y

    covered = set()
    for f in kept_faces:
        covered.update(oriented_walk(c, sphere.orientation.oriented(f)))
    out = []
    for e in sorted(kept):
        for x in (2 * e, 2 * e + 1):
            if x in covered:
                continue
            orbit = []
            y = x
            while True:
                orbit.append(y)
                covered.add(y)
                y = rotate(y ^ 1)
                if y == x:
                    break
            out.append(CycleClass.from_cyclic(orbit, [c.tail(z) for z in orbit]))
    return out


class SubmapError(ComplexError):
    pass


def submap(m: MapStruct, vertices: Optional[Iterable[int]] = None,
           edges: Optional[Iterable[int]] = None,
           faces: Optional[Iterable[int]] = None) -> MapStruct:
    """Connected subcomplex of ``m`` with the inherited map structure."""
    c = m.complex
    if vertices is None and edges is None and faces is None:
        return m
    vs = set(c.vertices if vertices is None else vertices)
    es = set(() if edges is None else edges)
    fs = set(() if faces is None else faces)
    sub = c.subcomplex(vs, es, fs)
    report = validate_complex(sub)
    if not report.ok:
        raise SubmapError(f"selection is not a subcomplex: {report.violations[0]}")
    if not is_connected(sub):
        raise SubmapError("selection is not connected")
    if not sub.edges:
        return trivial_map(sub.vertices[0], sub.names)
    if m.is_trivial:
        return m
    sphere = closing_sphere(m)
    contours = trace_contours(sphere, sub.edges, sub.faces)
    return MapStruct(sub, m.orientation.restrict(sub.faces), _sorted_contours(contours))


def face_submap(m: MapStruct, faces: Iterable[int]) -> MapStruct:
    """The submap spanned by some faces and their boundaries."""
    cl = m.complex.closure_of(faces=faces)
    return submap(m, cl.vertices, cl.edges, cl.faces)


# -- classification ----------------------------------------------------------


class MapFlags(NamedTuple):
    simple: bool
    disc: bool
    exceptional: bool
    degenerate: bool


def is_simple_map(m: MapStruct) -> bool:
    seen = set()
    for cyc in m.contours:
        if not classify_cycle(m.complex, cyc).simple_cycle:
            return False
        vs = cyc.vertex_set()
        if not seen.isdisjoint(vs):
            return False
        seen |= vs
    return True


def classify_map(m: MapStruct, check_invariants: bool = True) -> MapFlags:
    c = m.complex
    simple = is_simple_map(m)
    disc = len(m.contours) == 1
    exceptional = m.is_spherical and is_combinatorial_circle(c.skeleton())
    flags = MapFlags(simple, disc, exceptional, m.is_degenerate)
    if check_invariants:
        if simple and not m.is_trivial:
            on_faces = {x >> 1 for w in c.faces.values() for x in w}
            if set(c.edges) - on_faces:
                raise InvariantError("simple map with an edge on no face")
        if disc and not m.is_trivial and simple != is_combinatorial_disc(c):
            raise InvariantError("disc map: simplicity disagrees with being a combinatorial disc")
    return flags


def map_violations(m: MapStruct) -> List[str]:
    """Structural checks on a map; empty when it is well formed."""
    c = m.complex
    out = []
    if not validate_complex(c).ok:
        out.append("complex invalid")
        return out
    if not is_connected(c):
        out.append("not connected")
    if m.is_trivial:
        if len(c.vertices) != 1 or len(m.contours) != 1:
            out.append("trivial map must be one vertex with one trivial contour")
        return out
    tally: Dict[int, int] = {}
    for f in c.faces:
        for x in oriented_walk(c, m.orientation.oriented(f)):
            tally[x] = tally.get(x, 0) + 1
    for cyc in m.contours:
        for x in cyc.steps:
            tally[x] = tally.get(x, 0) + 1
    for x in c.darts():
        if tally.get(x, 0) != 1:
            out.append(f"dart {x} covered {tally.get(x, 0)} times")
            break
    try:
        spherical_closure(m)
    except InvalidMapError as exc:
        out.append(str(exc))
    return out


# -- arcs in maps ------------------------------------------------------------


class ArcClassification(NamedTuple):
    position: str                 # "external" | "internal"
    internal_kind: str            # "inter_facial" | "intro_facial" | "none"
    direction: str                # "outward" | "inward" | "none"
    faces: Tuple[int, ...]
    between: Optional[Tuple[int, int]] = None
    unresolved: bool = False


def is_outward(m: MapStruct, p: PathSeq) -> bool:
    """True when ``p`` starts some simple path ending on the contour of a disc map."""
    c = m.complex
    rim = m.contours[0].vertex_set()
    h = p.end
    if h in rim:
        return True
    if h == p.start:
        return False
    middle = set(p.intermediate)
    blocked = middle | {p.start}
    visited = {h}
    frontier = [h]
    while frontier:
        nxt = []
        for v in frontier:
            for x in c.out_darts[v]:
                if v == h and x == p.steps[-1] ^ 1:
                    continue
                w = c.head(x)
                if w in visited:
                    continue
                if w in rim and w not in middle:
                    return True
                if w in blocked:
                    continue
                visited.add(w)
                nxt.append(w)
        frontier = nxt
    return False


def classify_arc(m: MapStruct, u) -> ArcClassification:
    """Position and kind of an arc (``ArcRec``) or oriented arc (``PathSeq``)."""
    p = u.path if isinstance(u, ArcRec) else u
    c = m.complex
    faces = incident_faces(c, p)
    if not faces:
        raise InvalidMapError("arc is incident to no face")
    q = invert(p)
    external = any(subpath_of_cycle(c, p, cyc) or subpath_of_cycle(c, q, cyc)
                   for cyc in m.contours)
    if external:
        return ArcClassification("external", "none", "none", tuple(faces))
    if len(faces) >= 2:
        return ArcClassification("internal", "inter_facial", "none", tuple(faces),
                                 (faces[0], faces[1]) if len(faces) == 2 else None)
    direction, unresolved = "none", False
    if len(m.contours) == 1 and not m.contours[0].is_trivial:
        if is_outward(m, p):
            direction = "outward"
        elif is_outward(m, q):
            direction = "inward"
        else:
            unresolved = True
    return ArcClassification("internal", "intro_facial", direction, tuple(faces),
                             (faces[0], faces[0]), unresolved)


# -- isomorphism of maps -----------------------------------------------------


def contour_image(phi: Morphism, cyc: CycleClass) -> CycleClass:
    if cyc.is_trivial:
        return trivial_cycle(phi.vertex_map[cyc.vertices[0]])
    steps = [phi.dart_image(x) for x in cyc.steps]
    return CycleClass.from_cyclic(steps, [phi.vertex_map[v] for v in cyc.vertices])


def find_map_isomorphism(m1: MapStruct, m2: MapStruct) -> Optional[Morphism]:
    """Isomorphism of the complexes preserving face orientations and contours."""
    if len(m1.contours) != len(m2.contours) or m1.kind != m2.kind:
        return None
    if m1.kind == "trivial":
        (v,), (w,) = m1.complex.vertices, m2.complex.vertices
        return Morphism(m1.complex, m2.complex, {v: w})
    orientations = (m1.orientation.flags, m2.orientation.flags)
    if m1.is_spherical:
        return find_isomorphism(m1.complex, m2.complex, orientations=orientations)
    # Match the closing spheres instead: every edge then lies on a face, so
    # the search is anchored after its first face.  Holes must go to holes.
    r1, r2 = spherical_closure(m1), spherical_closure(m2)
    holes1, holes2 = set(r1.improper_faces), set(r2.improper_faces)

    def holes_to_holes(phi):
        return all((f in holes1) == (phi.face_map[f][0] in holes2) for f in phi.face_map)

    phi = find_isomorphism(r1.sphere.complex, r2.sphere.complex,
                           orientations=(r1.sphere.orientation.flags,
                                         r2.sphere.orientation.flags),
                           accept=holes_to_holes)
    if phi is None:
        return None
    faces = {f: img for f, img in phi.face_map.items() if f not in holes1}
    return Morphism(m1.complex, m2.complex, dict(phi.vertex_map), dict(phi.edge_map), faces)


# -- cutting out and pasting -------------------------------------------------


class CutOutError(ComplexError):
    pass


def cut_out(m: MapStruct, c: CycleClass) -> Optional[Tuple[MapStruct, Morphism]]:
    """The simple disc map that ``c`` cuts out of the disc map ``m``, if any.

    Returns ``None`` when ``c`` runs counterclockwise, i.e. when the region
    it bounds away from the contour has contour ``c`` inverted.
    """
    if len(m.contours) != 1:
        raise CutOutError("expected a disc map")
    if c.is_trivial:
        raise CutOutError("cycle is trivial")
    if not classify_cycle(m.complex, c).simple_cycle:
        raise CutOutError("cycle is not simple")
    closure = spherical_closure(m)
    sphere = closure.sphere.complex
    (outside,) = closure.improper_faces
    cut = c.edges()
    parent = {f: f for f in sphere.faces}

    def find(f):
        while parent[f] != f:
            parent[f] = parent[parent[f]]
            f = parent[f]
        return f

    for e in sphere.edges:
        if e in cut:
            continue
        fs = sphere.faces_at_edge(e)
        for g in fs[1:]:
            a, b = find(fs[0]), find(g)
            if a != b:
                parent[a] = b
    regions: Dict[int, List[int]] = {}
    for f in sorted(sphere.faces):
        regions.setdefault(find(f), []).append(f)
    if len(regions) != 2:
        raise CutOutError(f"cycle splits the sphere into {len(regions)} regions, expected 2")
    inside = next(fs for fs in regions.values() if outside not in fs)
    piece = face_submap(m, inside)
    if piece.contours == (c,):
        flags = classify_map(piece)
        if not (flags.simple and flags.disc):
            raise InvariantError("cut-out region is not a simple disc map")
        return piece, inclusion(piece.complex, m.complex)
    if piece.contours == (c.inverse(),):
        return None
    raise InvariantError("region bounded by a simple cycle has an unexpected contour")


def verify_pasting(target: MapStruct, candidate: MapStruct, zeta: Morphism, c: CycleClass) -> bool:
    if zeta.source != candidate.complex or zeta.target != target.complex:
        return False
    if not zeta.is_valid():
        return False
    flags = classify_map(candidate, check_invariants=False)
    if not (flags.simple and flags.disc):
        return False
    if not zeta.face_injective():
        return False
    for f, (f2, _, reflected) in zeta.face_map.items():
        if candidate.orientation[f] ^ reflected != target.orientation[f2]:
            return False
    return contour_image(zeta, candidate.contours[0]) == c
