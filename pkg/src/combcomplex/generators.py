"""Seeded constructions of oriented combinatorial spheres.

Every sphere here starts as two polygons glued along their boundary and is
grown by two local moves, each of which keeps it a sphere:

* ``subdivide e`` puts a fresh vertex in the middle of edge ``e``;
* ``split f i j`` draws a new edge across face ``f`` between the tails of
  walk positions ``i`` and ``j``.

Randomness comes from ``random.Random`` (Mersenne Twister), so a seed gives
the same sphere on every platform.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .core import Complex2, ComplexError, Names
from .maps import MapStruct
from .paths import ArcRec, PathSeq, incident_faces, maximal_arcs
from .surface import OrientationChoice


class GeneratorError(ComplexError):
    pass


_ARITY = {"polygon_double": 1, "subdivide": 1, "split": 3}


@dataclass(frozen=True)
class GenOp:
    kind: str
    args: Tuple[int, ...]

    def __post_init__(self):
        if self.kind not in _ARITY:
            raise GeneratorError(f"unknown operation {self.kind!r}")
        if len(self.args) != _ARITY[self.kind]:
            raise GeneratorError(f"{self.kind} takes {_ARITY[self.kind]} argument(s)")

    def __str__(self) -> str:
        return " ".join([self.kind, *map(str, self.args)])

    @classmethod
    def parse(cls, line: str) -> "GenOp":
        kind, *rest = line.split()
        try:
            args = tuple(int(a) for a in rest)
        except ValueError:
            raise GeneratorError(f"bad operation arguments in {line!r}") from None
        return cls(kind, args)


class _Builder:
    """Mutable sphere under construction; ids stay dense."""

    def __init__(self, n_vertices, edges, faces, flags, names=None):
        self.n_vertices = n_vertices
        self.edges: Dict[int, Tuple[int, int]] = dict(edges)
        self.faces: Dict[int, Tuple[int, ...]] = dict(faces)
        self.flags: Dict[int, bool] = dict(flags)
        self.names = names or Names()

    @classmethod
    def from_map(cls, s: MapStruct) -> "_Builder":
        if not s.is_spherical:
            raise GeneratorError("expected a spherical map")
        c = s.complex
        if tuple(c.vertices) != tuple(range(len(c.vertices))):
            raise GeneratorError("vertex ids must be 0..n-1")
        return cls(len(c.vertices), c.edges, c.faces,
                   {f: s.orientation[f] for f in c.faces}, c.names)

    def tail(self, x):
        a, b = self.edges[x >> 1]
        return b if x & 1 else a

    def subdivide(self, e: int) -> None:
        if e not in self.edges:
            raise GeneratorError(f"unknown edge {e}")
        a, b = self.edges[e]
        v = self.n_vertices
        self.n_vertices += 1
        e2 = max(self.edges) + 1
        self.edges[e] = (a, v)
        self.edges[e2] = (v, b)
        fwd, bwd = (2 * e, 2 * e2), (2 * e2 + 1, 2 * e + 1)
        for f, walk in self.faces.items():
            if any(x >> 1 == e for x in walk):
                new = []
                for x in walk:
                    if x == 2 * e:
                        new.extend(fwd)
                    elif x == 2 * e + 1:
                        new.extend(bwd)
                    else:
                        new.append(x)
                self.faces[f] = tuple(new)

    def split(self, f: int, i: int, j: int) -> None:
        if f not in self.faces:
            raise GeneratorError(f"unknown face {f}")
        walk = self.faces[f]
        n = len(walk)
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise GeneratorError(f"invalid walk positions {i}, {j} for a face of degree {n}")
        i, j = sorted((i, j))
        ne = max(self.edges) + 1
        self.edges[ne] = (self.tail(walk[i]), self.tail(walk[j]))
        nf = max(self.faces) + 1
        self.faces[f] = walk[i:j] + (2 * ne + 1,)
        self.faces[nf] = walk[j:] + walk[:i] + (2 * ne,)
        self.flags[nf] = self.flags[f]

    def apply(self, op: GenOp) -> None:
        if op.kind == "subdivide":
            self.subdivide(*op.args)
        elif op.kind == "split":
            self.split(*op.args)
        else:
            raise GeneratorError("polygon_double may only start an op log")

    def to_map(self) -> MapStruct:
        c = Complex2(tuple(range(self.n_vertices)), self.edges, self.faces, 2, self.names)
        return MapStruct(c, OrientationChoice(dict(self.flags)), ())


def _polygon_builder(n: int) -> _Builder:
    if n < 1:
        raise GeneratorError("a polygon needs at least one side")
    edges = {i: (i, (i + 1) % n) for i in range(n)}
    forward = tuple(2 * i for i in range(n))
    backward = tuple(2 * i + 1 for i in reversed(range(n)))
    return _Builder(n, edges, {0: forward, 1: backward}, {0: False, 1: False})


def polygon_double(n: int) -> MapStruct:
    """Two ``n``-gons glued along their boundary; edge ``i`` runs ``i -> i+1``."""
    return _polygon_builder(n).to_map()


def subdivide_edge(s: MapStruct, e: int) -> MapStruct:
    b = _Builder.from_map(s)
    b.subdivide(e)
    return b.to_map()


def split_face(s: MapStruct, f: int, i: int, j: int) -> MapStruct:
    b = _Builder.from_map(s)
    b.split(f, i, j)
    return b.to_map()


def replay(ops: Sequence[GenOp]) -> MapStruct:
    if not ops or ops[0].kind != "polygon_double":
        raise GeneratorError("an op log starts with polygon_double")
    b = _polygon_builder(*ops[0].args)
    for op in ops[1:]:
        b.apply(op)
    return b.to_map()


def random_sphere(seed: int, n_ops: int, max_sides: int = 6) -> Tuple[MapStruct, List[GenOp]]:
    """A seeded oriented sphere and the op log that rebuilds it."""
    rng = random.Random(seed)
    k = rng.randint(1, max_sides)
    b = _polygon_builder(k)
    ops = [GenOp("polygon_double", (k,))]
    for _ in range(n_ops):
        splittable = [f for f in sorted(b.faces) if len(b.faces[f]) >= 2]
        if splittable and rng.random() < 0.5:
            f = rng.choice(splittable)
            i, j = sorted(rng.sample(range(len(b.faces[f])), 2))
            op = GenOp("split", (f, i, j))
        else:
            op = GenOp("subdivide", (rng.choice(sorted(b.edges)),))
        b.apply(op)
        ops.append(op)
    return b.to_map(), ops


# -- random arc systems --------------------------------------------------------


def _sub_arcs(p: PathSeq) -> List[ArcRec]:
    n = len(p.steps)
    return [ArcRec(PathSeq(p.vertices[a:b + 1], p.steps[a:b]))
            for a in range(n) for b in range(a + 1, n + 1)]


def arc_pool(d: Complex2) -> List[ArcRec]:
    """Every arc of ``d`` that is a piece of some maximal arc."""
    pool = set()
    for arc in maximal_arcs(d):
        pool.update(ArcRec.of(sub.path) for sub in _sub_arcs(arc.path))
    return sorted(pool)


def random_arc_system(d: Complex2, rng: random.Random, max_arcs: int = 4,
                      pool: Optional[List[ArcRec]] = None) -> List[ArcRec]:
    """Non-overlapping arcs chained through shared faces, grown one at a time.

    The result satisfies the arc-system conditions by construction; callers
    still validate it.
    """
    pool = arc_pool(d) if pool is None else pool
    if not pool:
        raise GeneratorError("complex has no arcs")
    faces_of = {}
    chosen = [rng.choice(pool)]
    target = rng.randint(1, max_arcs)
    used = set(chosen[0].edges())
    reach = set(incident_faces(d, chosen[0].path))
    while len(chosen) < target:
        near = sorted({e for f in reach for e in (x >> 1 for x in d.faces[f])} - used)
        options = []
        for arc in pool:
            if arc.path.steps[0] >> 1 not in near or not used.isdisjoint(arc.edges()):
                continue
            if arc not in faces_of:
                faces_of[arc] = set(incident_faces(d, arc.path))
            if faces_of[arc] & reach:
                options.append(arc)
        if not options:
            break
        arc = rng.choice(options)
        chosen.append(arc)
        used |= arc.edges()
        reach |= faces_of[arc]
    return sorted(chosen)
