"""Contiguity graphs, the planar edge bound, arc systems and estimating complexes."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional, Tuple

from .core import (
    Complex2, ComplexError, Names, Violation, validate_complex, vertex_partition,
)
from .paths import ArcRec, PathSeq, incident_faces, invert, is_oriented_arc, make_path
from .surface import is_combinatorial_sphere
from .maps import InvariantError


class NotSimpleGraphError(ComplexError):
    pass


class NotASphereError(ComplexError):
    pass


class InvalidArcSystemError(ComplexError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class FactorizationError(ComplexError):
    pass


# -- contiguity --------------------------------------------------------------


@dataclass(frozen=True)
class ContiguityResult:
    graph: Complex2
    face_of_vertex: Mapping[int, int]
    pair_of_edge: Mapping[int, FrozenSet[int]]

    @property
    def vertex_of_face(self) -> Dict[int, int]:
        return {f: v for v, f in self.face_of_vertex.items()}


def contiguity_graph(d: Complex2, faces: Optional[Iterable[int]] = None) -> ContiguityResult:
    """Graph on ``faces`` (default: all) joining distinct faces that share an edge."""
    fs = sorted(set(d.faces if faces is None else faces))
    if not fs:
        raise ComplexError("the face set must be nonempty")
    for f in fs:
        if f not in d.faces:
            raise ComplexError(f"unknown face {f}")
    chosen = set(fs)
    pairs = set()
    for e in d.edges:
        at = [f for f in d.faces_at_edge(e) if f in chosen]
        pairs.update(frozenset(p) for p in combinations(at, 2))
    vertex = {f: i for i, f in enumerate(fs)}
    ordered = sorted(pairs, key=lambda p: sorted(vertex[f] for f in p))
    edges = {}
    pair_of_edge = {}
    for k, pair in enumerate(ordered):
        a, b = sorted(vertex[f] for f in pair)
        edges[k] = (a, b)
        pair_of_edge[k] = pair
    names = Names({vertex[f]: d.face_name(f) for f in fs}, {}, {})
    graph = Complex2(tuple(range(len(fs))), edges, {}, 1, names)
    return ContiguityResult(graph, {i: f for f, i in vertex.items()}, pair_of_edge)


class PlanarBound(NamedTuple):
    holds: bool
    n_vertices: int
    n_edges: int
    strong: Optional[bool]   # 3V >= E + 6, reported when V >= 3


def check_planar_bound(g: Complex2) -> PlanarBound:
    """Edge count against three times the vertex count, for a simple graph."""
    if any(a == b for a, b in g.edges.values()):
        raise NotSimpleGraphError("graph has a loop")
    seen = Counter(frozenset(ends) for ends in g.edges.values())
    if any(k > 1 for k in seen.values()):
        raise NotSimpleGraphError("graph has multiple edges")
    nv, ne = g.n_vertices, g.n_edges
    strong = 3 * nv >= ne + 6 if nv >= 3 else None
    return PlanarBound(ne < 3 * nv, nv, ne, strong)


# -- arc systems -------------------------------------------------------------


@dataclass(frozen=True)
class ArcSystem:
    ambient: Complex2
    arcs: Tuple[ArcRec, ...]

    def arc_faces(self) -> List[List[int]]:
        return [incident_faces(self.ambient, a.path) for a in self.arcs]


def check_arc_system(d: Complex2, arcs: Iterable[ArcRec]) -> List[Violation]:
    out: List[Violation] = []
    arcs = sorted(set(arcs))
    if not arcs:
        return [Violation("empty", "arc system", "-")]
    for k, a in enumerate(arcs):
        if not is_oriented_arc(d, a.path):
            out.append(Violation("not an arc", "arc", k))
    for i, j in combinations(range(len(arcs)), 2):
        if arcs[i].overlaps(arcs[j]):
            out.append(Violation("overlap", "arc pair", (i, j)))
    if out:
        return out
    faces = [set(incident_faces(d, a.path)) for a in arcs]
    reached = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in range(len(arcs)):
            if j not in reached and faces[i] & faces[j]:
                reached.add(j)
                frontier.append(j)
    if len(reached) != len(arcs):
        stray = min(set(range(len(arcs))) - reached)
        out.append(Violation("chain condition", "arc", stray,
                             "no chain of co-incident arcs from arc 0"))
    return out


def validate_arc_system(d: Complex2, arcs: Iterable[ArcRec]) -> ArcSystem:
    if not is_combinatorial_sphere(d):
        raise NotASphereError("ambient complex is not a combinatorial sphere")
    arcs = tuple(sorted(set(arcs)))
    bad = check_arc_system(d, arcs)
    if bad:
        raise InvalidArcSystemError(bad)
    return ArcSystem(d, arcs)


# -- estimating complex --------------------------------------------------------


class Factorization(NamedTuple):
    """``x0 y1 x1 ... yn xn``: ``runs`` are the x's, ``arcs`` the y's.

    Each y is ``(arc index, reversed)`` into ``ArcSystem.arcs``.
    """

    runs: Tuple[PathSeq, ...]
    arcs: Tuple[Tuple[int, bool], ...]

    def interleaved(self) -> list:
        out: list = [self.runs[0]]
        for y, x in zip(self.arcs, self.runs[1:]):
            out.extend((y, x))
        return out


def _oriented_steps(arc: ArcRec, rev: bool) -> Tuple[int, ...]:
    return invert(arc.path).steps if rev else arc.path.steps


def factor_boundary(d: Complex2, f: int, sys: ArcSystem) -> Factorization:
    """Split the stored boundary walk of ``f`` into runs off the arcs and whole arcs."""
    starts: Dict[int, Tuple[int, bool]] = {}
    arc_edge: Dict[int, int] = {}
    for k, arc in enumerate(sys.arcs):
        for rev in (False, True):
            starts[_oriented_steps(arc, rev)[0]] = (k, rev)
        for e in arc.edges():
            arc_edge[e] = k
    walk = d.faces[f]
    n = len(walk)
    k0 = min(range(n), key=lambda k: walk[k:] + walk[:k])
    walk = walk[k0:] + walk[:k0]
    s = next((i for i, x in enumerate(walk) if x in starts), None)
    if s is None:
        raise FactorizationError(f"face {f} meets no arc of the system")
    walk = walk[s:] + walk[:s]
    runs: List[PathSeq] = []
    ys: List[Tuple[int, bool]] = []
    cur: List[int] = []
    cur_start = d.tail(walk[0])
    i = 0
    while i < n:
        x = walk[i]
        if x in starts:
            k, rev = starts[x]
            steps = _oriented_steps(sys.arcs[k], rev)
            if walk[i:i + len(steps)] != steps:
                raise FactorizationError(f"face {f} leaves arc {k} part way")
            runs.append(make_path(d, cur_start, cur))
            ys.append((k, rev))
            i += len(steps)
            cur = []
            cur_start = d.head(steps[-1])
        elif (x >> 1) in arc_edge:
            raise FactorizationError(f"face {f} enters arc {arc_edge[x >> 1]} part way")
        else:
            cur.append(x)
            i += 1
    runs.append(make_path(d, cur_start, cur))
    return Factorization(tuple(runs), tuple(ys))


@dataclass(frozen=True)
class EstimatingResult:
    phi: Complex2
    components: Tuple[FrozenSet[int], ...]
    alpha0: Mapping[int, int]                   # component index -> vertex of phi
    alpha1: Mapping[Tuple[int, bool], int]      # oriented arc -> dart of phi
    alpha2: Mapping[int, int]                   # face of the sphere -> face of phi
    faces: Tuple[int, ...]
    factorizations: Mapping[int, Factorization] = field(default_factory=dict)

    def component_of(self, v: int) -> int:
        for i, comp in enumerate(self.components):
            if v in comp:
                return i
        raise KeyError(v)


def remainder(sys: ArcSystem) -> Tuple[Complex2, Tuple[int, ...]]:
    """The complex left after deleting the arcs and every face touching them."""
    d = sys.ambient
    faces = sorted({f for fs in sys.arc_faces() for f in fs})
    gone_edges = {e for a in sys.arcs for e in a.edges()}
    gone_vertices = {v for a in sys.arcs for v in a.intermediate}
    keep_faces = [f for f in d.faces if f not in set(faces)]
    psi = d.subcomplex([v for v in d.vertices if v not in gone_vertices],
                       [e for e in d.edges if e not in gone_edges], keep_faces)
    return psi, tuple(faces)


def estimating_complex(sys: ArcSystem) -> EstimatingResult:
    d = sys.ambient
    psi, faces = remainder(sys)
    if not validate_complex(psi).ok:
        raise InvariantError("remainder is not a subcomplex")
    parts = vertex_partition(psi)
    components = tuple(frozenset(p) for p in parts)
    where = {v: i for i, p in enumerate(parts) for v in p}
    alpha0 = {i: i for i in range(len(parts))}
    edges = {}
    alpha1 = {}
    for k, arc in enumerate(sys.arcs):
        edges[k] = (where[arc.path.start], where[arc.path.end])
        alpha1[(k, False)] = 2 * k
        alpha1[(k, True)] = 2 * k + 1
    phi_faces = {}
    alpha2 = {}
    facts = {}
    for j, f in enumerate(faces):
        fac = factor_boundary(d, f, sys)
        for run in fac.runs:
            if len({where.get(v) for v in run.vertices}) != 1 or run.start not in where:
                raise InvariantError(f"face {f}: a run leaves its component")
        facts[f] = fac
        phi_faces[j] = tuple(alpha1[y] for y in fac.arcs)
        alpha2[f] = j
    names = Names(
        {i: d.vertex_name(min(p)) for i, p in enumerate(parts)},
        {k: d.edge_name(arc.path.steps[0] >> 1) for k, arc in enumerate(sys.arcs)},
        {j: d.face_name(f) for j, f in enumerate(faces)},
    )
    phi = Complex2(tuple(range(len(parts))), edges, phi_faces, 2, names)
    report = validate_complex(phi)
    if not report.ok:
        raise InvariantError(f"estimating complex is malformed: {report.violations[0]}")
    if not is_combinatorial_sphere(phi):
        raise InvariantError("estimating complex is not a combinatorial sphere")
    return EstimatingResult(phi, components, alpha0, alpha1, alpha2, faces, facts)


def estimating_violations(res: EstimatingResult, sys: ArcSystem) -> List[str]:
    """Check the defining properties of the bijections on a computed result."""
    phi = res.phi
    out = []
    if phi.n_edges != len(sys.arcs) or phi.n_faces != len(res.faces):
        out.append("cardinalities")
    for k in range(len(sys.arcs)):
        if res.alpha1[(k, False)] ^ 1 != res.alpha1[(k, True)]:
            out.append(f"arc {k}: images not mutually inverse")
    for (k, rev), x in res.alpha1.items():
        p = invert(sys.arcs[k].path) if rev else sys.arcs[k].path
        for i, comp in enumerate(res.components):
            v = res.alpha0[i]
            if (phi.tail(x) == v) != (p.start in comp):
                out.append(f"arc {k}: tail/component mismatch")
            if (phi.head(x) == v) != (p.end in comp):
                out.append(f"arc {k}: head/component mismatch")
    for f, fac in res.factorizations.items():
        walk = phi.faces[res.alpha2[f]]
        if tuple(res.alpha1[y] for y in fac.arcs) != walk:
            out.append(f"face {f}: boundary does not correspond")
    if len(set(res.alpha2.values())) != len(res.alpha2):
        out.append("faces not bijective")
    return out
