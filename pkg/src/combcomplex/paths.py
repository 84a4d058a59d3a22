"""Paths, cycles and arcs in the 1-skeleton of a complex."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, NamedTuple, Sequence, Tuple

from .core import Complex2, ComplexError, vertex_degree


class PathError(ComplexError):
    pass


class CoverPreconditionError(ComplexError):
    """Raised when a cycle repeats an oriented edge, so covering is undefined."""


@dataclass(frozen=True, order=True)
class PathSeq:
    """Alternating vertices and darts; ``len(vertices) == len(steps) + 1``."""

    vertices: Tuple[int, ...]
    steps: Tuple[int, ...] = ()

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def is_trivial(self) -> bool:
        return not self.steps

    @property
    def is_cyclic(self) -> bool:
        return self.start == self.end

    @property
    def intermediate(self) -> Tuple[int, ...]:
        return self.vertices[1:-1]

    def edges(self) -> FrozenSet[int]:
        return frozenset(x >> 1 for x in self.steps)


def trivial_path(v: int) -> PathSeq:
    return PathSeq((v,), ())


def make_path(c: Complex2, start: int, steps: Sequence[int] = ()) -> PathSeq:
    if start not in c.vertex_set:
        raise PathError(f"unknown vertex {start}")
    verts = [start]
    for x in steps:
        if (x >> 1) not in c.edges:
            raise PathError(f"unknown edge {x >> 1}")
        if c.tail(x) != verts[-1]:
            raise PathError(f"dart {x} does not leave vertex {verts[-1]}")
        verts.append(c.head(x))
    return PathSeq(tuple(verts), tuple(steps))


def path_from_darts(c: Complex2, steps: Sequence[int]) -> PathSeq:
    if not steps:
        raise PathError("need at least one dart")
    return make_path(c, c.tail(steps[0]), steps)


def path_in(c: Complex2, p: PathSeq) -> bool:
    try:
        return make_path(c, p.start, p.steps) == p
    except PathError:
        return False


def invert(p: PathSeq) -> PathSeq:
    return PathSeq(p.vertices[::-1], tuple(x ^ 1 for x in reversed(p.steps)))


def concat(p1: PathSeq, p2: PathSeq) -> PathSeq:
    if p1.end != p2.start:
        raise PathError(f"path ends at {p1.end} but the next starts at {p2.start}")
    return PathSeq(p1.vertices + p2.vertices[1:], p1.steps + p2.steps)


def is_reduced(p: PathSeq) -> bool:
    s = p.steps
    return all(s[i + 1] != s[i] ^ 1 for i in range(len(s) - 1))


def is_simple(p: PathSeq) -> bool:
    if p.is_trivial or not is_reduced(p):
        return False
    seen = {}
    for v in p.vertices:
        seen[v] = seen.get(v, 0) + 1
    return all(seen[v] == 1 for v in p.intermediate)


class PathFlags(NamedTuple):
    reduced: bool
    simple: bool


def classify_path(c: Complex2, p: PathSeq) -> PathFlags:
    if not path_in(c, p):
        raise PathError("path is not a path of this complex")
    return PathFlags(is_reduced(p), is_simple(p))


# -- cycles ------------------------------------------------------------------


def _least_rotation(steps: Tuple[int, ...]) -> int:
    n = len(steps)
    return min(range(n), key=lambda k: steps[k:] + steps[:k]) if n else 0


@dataclass(frozen=True, order=True)
class CycleClass:
    """A cycle, stored as its lexicographically least cyclic shift.

    ``vertices[i]`` is the tail of ``steps[i]``; a trivial cycle keeps its
    single vertex.
    """

    steps: Tuple[int, ...]
    vertices: Tuple[int, ...]

    @classmethod
    def from_cyclic(cls, steps: Sequence[int], tails: Sequence[int]) -> "CycleClass":
        steps = tuple(steps)
        tails = tuple(tails)
        if not steps:
            return cls((), tails[:1])
        k = _least_rotation(steps)
        return cls(steps[k:] + steps[:k], tails[k:] + tails[:k])

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def is_trivial(self) -> bool:
        return not self.steps

    def representative(self) -> PathSeq:
        if self.is_trivial:
            return PathSeq(self.vertices[:1])
        return PathSeq(self.vertices + self.vertices[:1], self.steps)

    def shifts(self) -> List[PathSeq]:
        if self.is_trivial:
            return [self.representative()]
        n = len(self.steps)
        out = []
        for k in range(n):
            verts = self.vertices[k:] + self.vertices[:k]
            out.append(PathSeq(verts + verts[:1], self.steps[k:] + self.steps[:k]))
        return out

    def inverse(self) -> "CycleClass":
        if self.is_trivial:
            return self
        n = len(self.steps)
        steps = [self.steps[i] ^ 1 for i in reversed(range(n))]
        tails = [self.vertices[(i + 1) % n] for i in reversed(range(n))]
        return CycleClass.from_cyclic(steps, tails)

    def vertex_set(self) -> FrozenSet[int]:
        return frozenset(self.vertices)

    def edges(self) -> FrozenSet[int]:
        return frozenset(x >> 1 for x in self.steps)


def cycle_of(p: PathSeq) -> CycleClass:
    if not p.is_cyclic:
        raise PathError("path is not cyclic")
    return CycleClass.from_cyclic(p.steps, p.vertices[:-1] if p.steps else p.vertices)


def cycle_from_darts(c: Complex2, steps: Sequence[int]) -> CycleClass:
    p = path_from_darts(c, steps)
    return cycle_of(p)


def trivial_cycle(v: int) -> CycleClass:
    return CycleClass((), (v,))


class CycleFlags(NamedTuple):
    cyclically_reduced: bool
    reduced_cycle: bool
    simple_cycle: bool


def _cyclically_reduced(p: PathSeq) -> bool:
    return is_reduced(p) and (p.is_trivial or p.steps[0] != p.steps[-1] ^ 1)


def classify_cycle(c: Complex2, cyc: CycleClass) -> CycleFlags:
    if not path_in(c, cyc.representative()):
        raise PathError("cycle is not a cycle of this complex")
    shifts = cyc.shifts()
    return CycleFlags(
        _cyclically_reduced(shifts[0]),
        all(_cyclically_reduced(p) for p in shifts),
        all(is_simple(p) for p in shifts),
    )


def subpath_of_cycle(c: Complex2, p: PathSeq, cyc: CycleClass) -> bool:
    if cyc.is_trivial:
        return p.is_trivial and p.start == cyc.vertices[0]
    if p.is_trivial:
        return p.start in cyc.vertex_set()
    n, m = len(cyc.steps), len(p.steps)
    power = -(-m // n) + 1
    word = cyc.steps * power
    needle = p.steps
    first = needle[0]
    for k in range(n):
        if word[k] == first and word[k:k + m] == needle:
            return True
    return False


def covers_cycle(c: Complex2, cyc: CycleClass, paths: Iterable[PathSeq]) -> bool:
    if len(set(cyc.steps)) != len(cyc.steps):
        raise CoverPreconditionError("an oriented edge occurs more than once in the cycle")
    seen = set()
    for p in paths:
        if p.is_trivial or not subpath_of_cycle(c, p, cyc):
            return False
        seen.update(p.steps)
    return set(cyc.steps) <= seen


def iter_simple_cycles(c: Complex2) -> Iterator[CycleClass]:
    """Every simple cycle of ``c``, each orientation separately.

    Enumerates from the least vertex of each cycle; exponential in general.
    """
    for s in sorted(c.vertices):
        stack = [(s, [], [s])]
        while stack:
            v, steps, verts = stack.pop()
            for x in c.out_darts[v]:
                w = c.head(x)
                if steps and x == steps[-1] ^ 1:
                    continue
                if w == s:
                    yield CycleClass.from_cyclic(steps + [x], verts)
                elif w > s and w not in verts:
                    stack.append((w, steps + [x], verts + [w]))


# -- arcs ----------------------------------------------------------------------


def is_oriented_arc(c: Complex2, p: PathSeq) -> bool:
    return path_in(c, p) and is_simple(p) and all(
        vertex_degree(c, v) == 2 for v in p.intermediate)


@dataclass(frozen=True, order=True)
class ArcRec:
    """A non-oriented arc, kept as the lesser of its two oriented arcs."""

    path: PathSeq

    @classmethod
    def of(cls, p: PathSeq) -> "ArcRec":
        q = invert(p)
        return cls(min(p, q, key=lambda r: r.steps))

    def __len__(self) -> int:
        return len(self.path)

    def oriented(self) -> Tuple[PathSeq, PathSeq]:
        return self.path, invert(self.path)

    def edges(self) -> FrozenSet[int]:
        return self.path.edges()

    @property
    def end_vertices(self) -> FrozenSet[int]:
        return frozenset((self.path.start, self.path.end))

    @property
    def intermediate(self) -> Tuple[int, ...]:
        return self.path.intermediate

    def overlaps(self, other: "ArcRec") -> bool:
        return not self.edges().isdisjoint(other.edges())


def make_arc(c: Complex2, p: PathSeq) -> ArcRec:
    if not is_oriented_arc(c, p):
        raise PathError("path is not an oriented arc")
    return ArcRec.of(p)


def arc_from_darts(c: Complex2, steps: Sequence[int]) -> ArcRec:
    return make_arc(c, path_from_darts(c, steps))


def _other_dart(c: Complex2, v: int, x: int) -> int:
    a, b = c.out_darts[v]
    return b if a == x else a


def _grow_arc(c: Complex2, x: int) -> PathSeq:
    steps = [x]
    verts = [c.tail(x), c.head(x)]
    while verts[-1] != verts[0] and len(c.out_darts[verts[-1]]) == 2:
        nxt = _other_dart(c, verts[-1], steps[-1] ^ 1)
        steps.append(nxt)
        verts.append(c.head(nxt))
    while verts[0] != verts[-1] and len(c.out_darts[verts[0]]) == 2:
        prev = _other_dart(c, verts[0], steps[0]) ^ 1
        steps.insert(0, prev)
        verts.insert(0, c.tail(prev))
    return PathSeq(tuple(verts), tuple(steps))


def maximal_arcs(c: Complex2) -> List[ArcRec]:
    """All maximal arcs, sorted.

    On a component that is a combinatorial circle every rotation is maximal,
    so those arcs overlap; elsewhere the result is non-overlapping.
    """
    found = set()
    for e in sorted(c.edges):
        for x in (2 * e, 2 * e + 1):
            found.add(ArcRec.of(_grow_arc(c, x)))
    return sorted(found)


def arc_extensions(c: Complex2, p: PathSeq) -> List[PathSeq]:
    """Paths obtained by adding one dart at either end of ``p``."""
    out = []
    for x in c.out_darts[p.end]:
        out.append(PathSeq(p.vertices + (c.head(x),), p.steps + (x,)))
    for x in c.out_darts[p.start]:
        y = x ^ 1
        out.append(PathSeq((c.tail(y),) + p.vertices, (y,) + p.steps))
    return out


def face_cycle(c: Complex2, f: int) -> CycleClass:
    """The boundary cycle of ``f`` read along its stored walk."""
    walk = c.faces[f]
    return CycleClass.from_cyclic(walk, [c.tail(x) for x in walk])


def incident_faces(c: Complex2, p: PathSeq) -> List[int]:
    """Faces having ``p`` or its inverse as a subpath of their boundary."""
    if p.is_trivial:
        return [f for f in sorted(c.faces) if p.start in c.walk_vertices(f)]
    q = invert(p)
    out = []
    for f in sorted(set(c.faces_at_edge(p.steps[0] >> 1))):
        cyc = face_cycle(c, f)
        if subpath_of_cycle(c, p, cyc) or subpath_of_cycle(c, q, cyc):
            out.append(f)
    return out
