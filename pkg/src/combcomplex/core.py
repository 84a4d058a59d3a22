"""Combinatorial 0-, 1- and 2-complexes and their morphisms.

Edges carry their attaching 0-sphere as two slots ``(a, b)``.  An oriented
edge (a *dart*) is the integer ``2*e`` (slot A to slot B) or ``2*e + 1``
(slot B to slot A), so ``x ^ 1`` is the inverse of ``x``.  A face stores one
boundary walk: a cyclic tuple of darts, each entering the tail of the next.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import kernels


def dart(edge: int, reverse: bool = False) -> int:
    return 2 * edge + (1 if reverse else 0)


def edge_of(x: int) -> int:
    return x >> 1


def inverse(x: int) -> int:
    return x ^ 1


def is_reversed(x: int) -> bool:
    return bool(x & 1)


class ComplexError(ValueError):
    """Base class for errors raised on malformed input."""


class UnknownCellError(ComplexError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)


class ComplexValidationError(ComplexError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class DomainMismatchError(ComplexError):
    pass


@dataclass(frozen=True)
class Violation:
    rule: str
    kind: str
    ident: object
    message: str = ""

    def __str__(self):
        text = f"{self.rule}: {self.kind} {self.ident}"
        return f"{text} ({self.message})" if self.message else text


@dataclass(frozen=True)
class ValidationReport:
    violations: Tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def rules(self):
        return {v.rule for v in self.violations}


@dataclass(frozen=True)
class Names:
    """User-facing names, kept for serialization only."""

    vertex: Mapping[int, str] = field(default_factory=dict)
    edge: Mapping[int, str] = field(default_factory=dict)
    face: Mapping[int, str] = field(default_factory=dict)

    def restrict(self, vertices, edges, faces) -> "Names":
        return Names(
            {v: n for v, n in self.vertex.items() if v in vertices},
            {e: n for e, n in self.edge.items() if e in edges},
            {f: n for f, n in self.face.items() if f in faces},
        )


@dataclass(frozen=True)
class DenseComplex:
    """Renumbered arrays for the compiled kernels."""

    vertex_ids: Tuple[int, ...]
    edge_ids: Tuple[int, ...]
    face_ids: Tuple[int, ...]
    dart_tail: object
    walks: object
    offsets: object


@dataclass(frozen=True, eq=True)
class Complex2:
    """A finite combinatorial complex of dimension ``dim`` (0, 1 or 2).

    ``edges`` maps an edge id to its ``(slot_a, slot_b)`` vertices and
    ``faces`` maps a face id to its boundary walk.  Instances are treated as
    immutable; derived data is cached on first use.
    """

    vertices: Tuple[int, ...]
    edges: Mapping[int, Tuple[int, int]] = field(default_factory=dict)
    faces: Mapping[int, Tuple[int, ...]] = field(default_factory=dict)
    dim: int = 2
    names: Names = field(default_factory=Names, compare=False, repr=False)

    # -- cells ------------------------------------------------------------

    @cached_property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def tail(self, x: int) -> int:
        a, b = self.edges[x >> 1]
        return b if x & 1 else a

    def head(self, x: int) -> int:
        a, b = self.edges[x >> 1]
        return a if x & 1 else b

    def is_loop(self, e: int) -> bool:
        a, b = self.edges[e]
        return a == b

    def darts(self) -> List[int]:
        return [x for e in sorted(self.edges) for x in (2 * e, 2 * e + 1)]

    @cached_property
    def out_darts(self) -> Dict[int, Tuple[int, ...]]:
        """Darts leaving each vertex, in increasing order."""
        table: Dict[int, List[int]] = {v: [] for v in self.vertices}
        for e in sorted(self.edges):
            a, b = self.edges[e]
            table[a].append(2 * e)
            table[b].append(2 * e + 1)
        return {v: tuple(sorted(xs)) for v, xs in table.items()}

    @cached_property
    def dart_occurrences(self) -> Dict[int, Tuple[Tuple[int, int], ...]]:
        """``dart -> ((face, position), ...)`` over all stored walks."""
        table: Dict[int, List[Tuple[int, int]]] = {}
        for f in sorted(self.faces):
            for i, x in enumerate(self.faces[f]):
                table.setdefault(x, []).append((f, i))
        return {x: tuple(v) for x, v in table.items()}

    def faces_at_edge(self, e: int) -> List[int]:
        occ = self.dart_occurrences
        found = {f for x in (2 * e, 2 * e + 1) for f, _ in occ.get(x, ())}
        return sorted(found)

    def walk_vertices(self, f: int) -> Tuple[int, ...]:
        """Tails of the darts of the stored walk of ``f``, position by position."""
        return tuple(self.tail(x) for x in self.faces[f])

    def vertex_name(self, v: int) -> str:
        return self.names.vertex.get(v, f"v{v}")

    def edge_name(self, e: int) -> str:
        return self.names.edge.get(e, f"e{e}")

    def face_name(self, f: int) -> str:
        return self.names.face.get(f, f"f{f}")

    # -- counts -----------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def counts(self) -> Tuple[int, int, int]:
        return self.n_vertices, self.n_edges, self.n_faces

    # -- derived complexes ------------------------------------------------

    def skeleton(self, dim: int = 1) -> "Complex2":
        if dim == 0:
            return Complex2(self.vertices, {}, {}, 0, self.names.restrict(self.vertex_set, (), ()))
        return Complex2(
            self.vertices, dict(self.edges), {}, 1,
            self.names.restrict(self.vertex_set, self.edges, ()),
        )

    def subcomplex(self, vertices: Iterable[int], edges: Iterable[int] = (),
                   faces: Iterable[int] = (), dim: Optional[int] = None) -> "Complex2":
        """Keep the given cells; no closure is taken, see :func:`validate_complex`."""
        vs = tuple(sorted(set(vertices)))
        es = {e: self.edges[e] for e in sorted(set(edges))}
        fs = {f: self.faces[f] for f in sorted(set(faces))}
        return Complex2(vs, es, fs, self.dim if dim is None else dim,
                        self.names.restrict(set(vs), es, fs))

    def closure_of(self, faces: Iterable[int] = (), edges: Iterable[int] = (),
                   vertices: Iterable[int] = ()) -> "Complex2":
        """Smallest subcomplex containing the given cells."""
        fs = set(faces)
        es = set(edges)
        vs = set(vertices)
        for f in fs:
            es.update(x >> 1 for x in self.faces[f])
        for e in es:
            vs.update(self.edges[e])
        return self.subcomplex(vs, es, fs)

    def without_faces(self, removed: Iterable[int]) -> "Complex2":
        gone = set(removed)
        return self.subcomplex(self.vertices, self.edges, [f for f in self.faces if f not in gone])

    @cached_property
    def dense(self) -> DenseComplex:
        vids = tuple(sorted(self.vertices))
        eids = tuple(sorted(self.edges))
        fids = tuple(sorted(self.faces))
        vix = {v: i for i, v in enumerate(vids)}
        eix = {e: i for i, e in enumerate(eids)}
        tails = []
        for e in eids:
            a, b = self.edges[e]
            tails.append(vix[a])
            tails.append(vix[b])
        walks = []
        offsets = [0]
        for f in fids:
            walks.extend(2 * eix[x >> 1] + (x & 1) for x in self.faces[f])
            offsets.append(len(walks))
        return DenseComplex(vids, eids, fids, kernels.as_array(tails),
                            kernels.as_array(walks), kernels.as_array(offsets))


class ComplexBuilder:
    """Incrementally assemble a :class:`Complex2` with dense ids."""

    def __init__(self):
        self._vertices: List[int] = []
        self._edges: Dict[int, Tuple[int, int]] = {}
        self._faces: Dict[int, Tuple[int, ...]] = {}
        self._names = Names({}, {}, {})

    def add_vertex(self, name: Optional[str] = None) -> int:
        v = len(self._vertices)
        self._vertices.append(v)
        if name is not None:
            self._names.vertex[v] = name
        return v

    def add_vertices(self, n: int) -> List[int]:
        return [self.add_vertex() for _ in range(n)]

    def add_edge(self, a: int, b: int, name: Optional[str] = None) -> int:
        e = len(self._edges)
        self._edges[e] = (a, b)
        if name is not None:
            self._names.edge[e] = name
        return e

    def add_face(self, walk: Sequence[int], name: Optional[str] = None) -> int:
        f = len(self._faces)
        self._faces[f] = tuple(walk)
        if name is not None:
            self._names.face[f] = name
        return f

    def build(self, dim: Optional[int] = None, validate: bool = True) -> Complex2:
        if dim is None:
            dim = 2 if self._faces else (1 if self._edges else 0)
        c = Complex2(tuple(self._vertices), dict(self._edges), dict(self._faces), dim,
                     Names(dict(self._names.vertex), dict(self._names.edge),
                           dict(self._names.face)))
        if validate:
            report = validate_complex(c)
            if not report.ok:
                raise ComplexValidationError(report.violations)
        return c


def make_complex(n_vertices: int, edges: Sequence[Tuple[int, int]] = (),
                 faces: Sequence[Sequence[int]] = (), dim: Optional[int] = None) -> Complex2:
    """Shorthand: vertices ``0..n-1``, edges and faces numbered in order."""
    b = ComplexBuilder()
    b.add_vertices(n_vertices)
    for a, c in edges:
        b.add_edge(a, c)
    for w in faces:
        b.add_face(w)
    return b.build(dim)


def validate_complex(c: Complex2) -> ValidationReport:
    out: List[Violation] = []
    if not c.vertices:
        out.append(Violation("empty vertex set", "complex", "-"))
    if len(set(c.vertices)) != len(c.vertices):
        dup = [v for v, k in Counter(c.vertices).items() if k > 1]
        out.append(Violation("duplicate vertex", "vertex", dup[0]))
    if c.dim not in (0, 1, 2):
        out.append(Violation("bad dimension", "complex", c.dim))
    if c.dim < 2 and c.faces:
        out.append(Violation("faces in low-dimensional complex", "complex", c.dim))
    if c.dim < 1 and c.edges:
        out.append(Violation("edges in 0-complex", "complex", c.dim))
    vs = c.vertex_set
    for e in sorted(c.edges):
        ends = c.edges[e]
        if len(ends) != 2:
            out.append(Violation("bad edge", "edge", e, "needs two slots"))
            continue
        for v in ends:
            if v not in vs:
                out.append(Violation("dangling endpoint", "edge", e, f"vertex {v} missing"))
    for f in sorted(c.faces):
        walk = c.faces[f]
        if not walk:
            out.append(Violation("empty walk", "face", f))
            continue
        if any((x >> 1) not in c.edges for x in walk):
            missing = next(x >> 1 for x in walk if (x >> 1) not in c.edges)
            out.append(Violation("dangling edge", "face", f, f"edge {missing} missing"))
            continue
        if any(v not in vs for x in walk for v in c.edges[x >> 1]):
            continue  # already reported on the edge
        n = len(walk)
        for i in range(n):
            if c.head(walk[i]) != c.tail(walk[(i + 1) % n]):
                out.append(Violation("broken walk", "face", f, f"position {i}"))
                break
    return ValidationReport(tuple(out))


def vertex_degree(c: Complex2, v: int) -> int:
    if v not in c.vertex_set:
        raise UnknownCellError(f"unknown vertex {v}")
    return len(c.out_darts[v])


def face_degree(c: Complex2, f: int) -> int:
    try:
        return len(c.faces[f])
    except KeyError:
        raise UnknownCellError(f"unknown face {f}") from None


def euler_characteristic(c: Complex2) -> int:
    return c.n_vertices - c.n_edges + c.n_faces


def vertex_partition(c: Complex2, edges: Optional[Iterable[int]] = None) -> List[List[int]]:
    """Vertex classes of the graph on ``c.vertices`` using ``edges`` (default all)."""
    parent = {v: v for v in c.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in (c.edges if edges is None else edges):
        a, b = c.edges[e]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: Dict[int, List[int]] = {}
    for v in sorted(c.vertices):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def connected_components(c: Complex2) -> List[Complex2]:
    parts = vertex_partition(c)
    where = {v: i for i, part in enumerate(parts) for v in part}
    edges: List[List[int]] = [[] for _ in parts]
    faces: List[List[int]] = [[] for _ in parts]
    for e, (a, _) in c.edges.items():
        edges[where[a]].append(e)
    for f, walk in c.faces.items():
        faces[where[c.tail(walk[0])]].append(f)
    return [c.subcomplex(p, es, fs) for p, es, fs in zip(parts, edges, faces)]


def is_connected(c: Complex2) -> bool:
    return len(vertex_partition(c)) == 1


def relabel(c: Complex2, vertex_map: Mapping[int, int], edge_map: Mapping[int, int],
            face_map: Mapping[int, int], flip_edges: Iterable[int] = (),
            rotate: Optional[Mapping[int, int]] = None) -> Complex2:
    """Renamed copy of ``c``.

    ``flip_edges`` swaps the slots of those (old) edges and ``rotate`` gives a
    starting offset for the stored walk of some (old) faces.
    """
    flipped = set(flip_edges)
    rotate = rotate or {}

    def image(x):
        e = x >> 1
        return 2 * edge_map[e] + ((x & 1) ^ (e in flipped))

    edges = {}
    for e, (a, b) in c.edges.items():
        a2, b2 = vertex_map[a], vertex_map[b]
        edges[edge_map[e]] = (b2, a2) if e in flipped else (a2, b2)
    faces = {}
    for f, walk in c.faces.items():
        k = rotate.get(f, 0) % len(walk)
        faces[face_map[f]] = tuple(image(x) for x in walk[k:] + walk[:k])
    names = Names(
        {vertex_map[v]: n for v, n in c.names.vertex.items()},
        {edge_map[e]: n for e, n in c.names.edge.items()},
        {face_map[f]: n for f, n in c.names.face.items()},
    )
    return Complex2(tuple(sorted(vertex_map[v] for v in c.vertices)),
                    dict(sorted(edges.items())), dict(sorted(faces.items())), c.dim, names)


# -- morphisms -------------------------------------------------------------


def _circle_image(walk: Sequence[int], i: int, rotation: int, reflected: bool) -> int:
    n = len(walk)
    if reflected:
        return walk[(rotation - i) % n] ^ 1
    return walk[(i + rotation) % n]


@dataclass(frozen=True)
class Morphism:
    """A morphism ``source -> target`` of combinatorial complexes.

    ``edge_map[e] = (e2, swapped)``: slot A of ``e`` goes to slot A of ``e2``
    unless ``swapped``.  ``face_map[f] = (f2, rotation, reflected)`` is the
    dihedral alignment of the two attaching circles: position ``i`` of the
    walk of ``f`` goes to position ``i + rotation`` of the walk of ``f2``, or
    to the inverse of position ``rotation - i`` when ``reflected``.
    """

    source: Complex2
    target: Complex2
    vertex_map: Mapping[int, int]
    edge_map: Mapping[int, Tuple[int, bool]] = field(default_factory=dict)
    face_map: Mapping[int, Tuple[int, int, bool]] = field(default_factory=dict)

    def dart_image(self, x: int) -> int:
        e2, swapped = self.edge_map[x >> 1]
        return 2 * e2 + ((x & 1) ^ int(swapped))

    def path_image(self, darts: Iterable[int]) -> Tuple[int, ...]:
        return tuple(self.dart_image(x) for x in darts)

    def oriented_face_image(self, f: int, reversed_: bool) -> Tuple[int, bool]:
        f2, _, reflected = self.face_map[f]
        return f2, reversed_ ^ reflected

    def violations(self) -> List[Violation]:
        src, dst = self.source, self.target
        out: List[Violation] = []
        for v in src.vertices:
            if self.vertex_map.get(v) not in dst.vertex_set:
                out.append(Violation("vertex map", "vertex", v))
        for e, (a, b) in src.edges.items():
            if e not in self.edge_map or self.edge_map[e][0] not in dst.edges:
                out.append(Violation("edge map", "edge", e))
                continue
            e2, swapped = self.edge_map[e]
            a2, b2 = dst.edges[e2]
            if swapped:
                a2, b2 = b2, a2
            if (self.vertex_map.get(a), self.vertex_map.get(b)) != (a2, b2):
                out.append(Violation("edge condition", "edge", e))
        for f, walk in src.faces.items():
            if f not in self.face_map or self.face_map[f][0] not in dst.faces:
                out.append(Violation("face map", "face", f))
                continue
            f2, rot, refl = self.face_map[f]
            w2 = dst.faces[f2]
            if len(w2) != len(walk):
                out.append(Violation("face condition", "face", f, "degree differs"))
                continue
            try:
                ok = all(self.dart_image(x) == _circle_image(w2, i, rot, refl)
                         for i, x in enumerate(walk))
            except KeyError:
                ok = False
            if not ok:
                out.append(Violation("face condition", "face", f))
        return out

    def is_valid(self) -> bool:
        return not self.violations()

    def is_isomorphism(self) -> bool:
        src, dst = self.source, self.target
        return (self.is_valid()
                and sorted(self.vertex_map[v] for v in src.vertices) == sorted(dst.vertices)
                and sorted(e2 for e2, _ in self.edge_map.values()) == sorted(dst.edges)
                and sorted(f2 for f2, _, _ in self.face_map.values()) == sorted(dst.faces))

    def face_injective(self) -> bool:
        images = [f2 for f2, _, _ in self.face_map.values()]
        return len(images) == len(set(images))


def identity(c: Complex2) -> Morphism:
    return Morphism(c, c, {v: v for v in c.vertices}, {e: (e, False) for e in c.edges},
                    {f: (f, 0, False) for f in c.faces})


def inclusion(sub: Complex2, ambient: Complex2) -> Morphism:
    """The natural morphism of a subcomplex into ``ambient``."""
    return Morphism(sub, ambient, {v: v for v in sub.vertices},
                    {e: (e, False) for e in sub.edges},
                    {f: (f, 0, False) for f in sub.faces})


def _compose_circle(n: int, first: Tuple[int, bool], second: Tuple[int, bool]) -> Tuple[int, bool]:
    r1, m1 = first
    r2, m2 = second
    if not m1 and not m2:
        return (r1 + r2) % n, False
    if m1 and not m2:
        return (r1 + r2) % n, True
    if not m1 and m2:
        return (r2 - r1) % n, True
    return (r2 - r1) % n, False


def compose(psi: Morphism, phi: Morphism) -> Morphism:
    """The product ``psi . phi`` (apply ``phi`` first)."""
    if phi.target != psi.source:
        raise DomainMismatchError("codomain of the first morphism is not the domain of the second")
    vmap = {v: psi.vertex_map[w] for v, w in phi.vertex_map.items()}
    emap = {}
    for e, (e1, s1) in phi.edge_map.items():
        e2, s2 = psi.edge_map[e1]
        emap[e] = (e2, bool(s1) ^ bool(s2))
    fmap = {}
    for f, (f1, r1, m1) in phi.face_map.items():
        f2, r2, m2 = psi.face_map[f1]
        n = len(phi.source.faces[f])
        rot, refl = _compose_circle(n, (r1, m1), (r2, m2))
        fmap[f] = (f2, rot, refl)
    return Morphism(phi.source, psi.target, vmap, emap, fmap)


def invert_morphism(phi: Morphism) -> Morphism:
    """Two-sided inverse of an isomorphism."""
    if not phi.is_isomorphism():
        raise ComplexError("morphism is not an isomorphism")
    vmap = {w: v for v, w in phi.vertex_map.items()}
    emap = {e2: (e, s) for e, (e2, s) in phi.edge_map.items()}
    fmap = {}
    for f, (f2, rot, refl) in phi.face_map.items():
        n = len(phi.source.faces[f])
        fmap[f2] = (f, rot % n, True) if refl else (f, (-rot) % n, False)
    return Morphism(phi.target, phi.source, vmap, emap, fmap)
