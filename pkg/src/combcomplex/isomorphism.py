"""Backtracking isomorphism search for desk-scale complexes.

Faces are matched first, in breadth-first order over shared edges, so that
after the first face of a piece every later face has an already mapped dart
and only a couple of alignments survive.  Edges outside faces follow,
then isolated vertices.  Vertex colours from a few rounds of refinement
prune the first choices.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple

from .core import Complex2, Morphism, vertex_degree


def _vertex_colours(c: Complex2, rounds: int = 3) -> Dict[int, int]:
    corners: Dict[int, List[int]] = {v: [] for v in c.vertices}
    for f, walk in c.faces.items():
        for x in walk:
            corners[c.tail(x)].append(len(walk))
    loops = Counter(a for a, b in c.edges.values() if a == b)
    colour = {v: hash((len(c.out_darts[v]), loops[v], tuple(sorted(corners[v]))))
              for v in c.vertices}
    for _ in range(rounds):
        colour = {v: hash((colour[v], tuple(sorted(colour[c.head(x)] for x in c.out_darts[v]))))
                  for v in c.vertices}
    return colour


def _signature(c: Complex2, colour: Mapping[int, int]):
    return (
        c.counts(),
        sorted(Counter(colour.values()).values()),
        sorted(len(w) for w in c.faces.values()),
    )


class _Search:
    def __init__(self, a: Complex2, b: Complex2, orientations=None):
        self.a, self.b = a, b
        self.orient = orientations
        self.ca = _vertex_colours(a)
        self.cb = _vertex_colours(b)
        self.vmap: Dict[int, int] = {}
        self.vused: set = set()
        self.emap: Dict[int, Tuple[int, bool]] = {}
        self.eused: set = set()
        self.fmap: Dict[int, Tuple[int, int, bool]] = {}
        self.fused: set = set()
        self.trail: List[Tuple[str, int]] = []
        self.b_by_degree: Dict[int, List[int]] = {}
        for g in sorted(b.faces):
            self.b_by_degree.setdefault(len(b.faces[g]), []).append(g)
        self.tasks = self._plan()

    # -- planning --------------------------------------------------------

    def _plan(self):
        a = self.a
        tasks = []
        seen_f = set()
        for start in sorted(a.faces):
            if start in seen_f:
                continue
            seen_f.add(start)
            queue = deque([start])
            while queue:
                f = queue.popleft()
                tasks.append(("face", f))
                for x in a.faces[f]:
                    for g in a.faces_at_edge(x >> 1):
                        if g not in seen_f:
                            seen_f.add(g)
                            queue.append(g)
        face_edges = {x >> 1 for w in a.faces.values() for x in w}
        covered = {a.tail(x) for w in a.faces.values() for x in w}
        free = [e for e in sorted(a.edges) if e not in face_edges]
        done = set()
        pending = set(free)
        while pending:
            # grow from covered vertices; start a new piece at the lowest edge
            progress = True
            while progress:
                progress = False
                for e in sorted(pending):
                    p, q = a.edges[e]
                    if p in covered or q in covered:
                        tasks.append(("edge", e))
                        done.add(e)
                        covered.update((p, q))
                        progress = True
                pending -= done
            if pending:
                e = min(pending)
                tasks.append(("edge", e))
                pending.discard(e)
                covered.update(a.edges[e])
        for v in sorted(a.vertices):
            if not a.out_darts[v]:
                tasks.append(("vertex", v))
        return tasks

    # -- state -----------------------------------------------------------

    def _undo(self, mark: int):
        while len(self.trail) > mark:
            kind, key = self.trail.pop()
            if kind == "v":
                self.vused.discard(self.vmap.pop(key))
            elif kind == "e":
                self.eused.discard(self.emap.pop(key)[0])
            else:
                self.fused.discard(self.fmap.pop(key)[0])

    def _assign_vertex(self, v: int, w: int) -> bool:
        got = self.vmap.get(v)
        if got is not None:
            return got == w
        if w in self.vused or self.ca[v] != self.cb[w]:
            return False
        self.vmap[v] = w
        self.vused.add(w)
        self.trail.append(("v", v))
        return True

    def _assign_dart(self, x: int, y: int) -> bool:
        e, e2 = x >> 1, y >> 1
        swapped = bool((x ^ y) & 1)
        got = self.emap.get(e)
        if got is not None:
            return got == (e2, swapped)
        if e2 in self.eused or self.a.is_loop(e) != self.b.is_loop(e2):
            return False
        self.emap[e] = (e2, swapped)
        self.eused.add(e2)
        self.trail.append(("e", e))
        return (self._assign_vertex(self.a.tail(x), self.b.tail(y))
                and self._assign_vertex(self.a.head(x), self.b.head(y)))

    # -- candidates ------------------------------------------------------

    def _face_candidates(self, f: int):
        a, b = self.a, self.b
        walk = a.faces[f]
        n = len(walk)
        options: List[Tuple[int, int, bool]] = []
        anchor = next((i for i, x in enumerate(walk) if (x >> 1) in self.emap), None)
        if anchor is not None:
            y = self._image(walk[anchor])
            occ = b.dart_occurrences
            for g, pos in occ.get(y, ()):
                options.append((g, (pos - anchor) % n, False))
            for g, pos in occ.get(y ^ 1, ()):
                options.append((g, (pos + anchor) % n, True))
        else:
            for g in self.b_by_degree.get(n, ()):
                for r in range(n):
                    options.append((g, r, False))
                    options.append((g, r, True))
        for g, r, m in options:
            if g in self.fused or len(b.faces[g]) != n:
                continue
            if self.orient is not None:
                oa, ob = self.orient
                if bool(oa.get(f, False)) ^ bool(ob.get(g, False)) != m:
                    continue
            yield (g, r, m)

    def _image(self, x: int) -> int:
        e2, s = self.emap[x >> 1]
        return 2 * e2 + ((x & 1) ^ int(s))

    def _edge_candidates(self, e: int):
        a, b = self.a, self.b
        p, q = a.edges[e]
        if p in self.vmap:
            x, base = 2 * e, self.vmap[p]
            ys = b.out_darts[base]
        elif q in self.vmap:
            x, base = 2 * e + 1, self.vmap[q]
            ys = b.out_darts[base]
        else:
            x = 2 * e
            ys = [y for e2 in sorted(b.edges) if e2 not in self.eused for y in (2 * e2, 2 * e2 + 1)]
        for y in ys:
            if (y >> 1) not in self.eused:
                yield (x, y)

    def _candidates(self, depth: int):
        kind, key = self.tasks[depth]
        if kind == "face":
            return self._face_candidates(key)
        if kind == "edge":
            return self._edge_candidates(key)
        free = [w for w in sorted(self.b.vertices)
                if w not in self.vused and not self.b.out_darts[w]]
        return iter([(key, free[0])] if free else [])

    def _apply(self, depth: int, cand) -> bool:
        kind, key = self.tasks[depth]
        if kind == "face":
            g, r, m = cand
            walk = self.a.faces[key]
            target = self.b.faces[g]
            n = len(walk)
            for i, x in enumerate(walk):
                y = (target[(r - i) % n] ^ 1) if m else target[(i + r) % n]
                if not self._assign_dart(x, y):
                    return False
            self.fmap[key] = (g, r, m)
            self.fused.add(g)
            self.trail.append(("f", key))
            return True
        if kind == "edge":
            x, y = cand
            return self._assign_dart(x, y)
        v, w = cand
        return self._assign_vertex(v, w)

    def _result(self) -> Morphism:
        return Morphism(self.a, self.b, dict(self.vmap), dict(self.emap), dict(self.fmap))

    def run(self) -> Iterator[Morphism]:
        n = len(self.tasks)
        iters = [None] * (n + 1)
        marks = [0] * (n + 1)
        depth = 0
        if n:
            iters[0] = self._candidates(0)
        while depth >= 0:
            if depth == n:
                yield self._result()
                depth -= 1
                if depth >= 0:
                    self._undo(marks[depth])
                continue
            advanced = False
            for cand in iters[depth]:
                marks[depth] = len(self.trail)
                if self._apply(depth, cand):
                    advanced = True
                    break
                self._undo(marks[depth])
            if advanced:
                depth += 1
                if depth < n:
                    iters[depth] = self._candidates(depth)
            else:
                depth -= 1
                if depth >= 0:
                    self._undo(marks[depth])


def iter_isomorphisms(a: Complex2, b: Complex2, orientations=None) -> Iterator[Morphism]:
    """Yield every isomorphism ``a -> b``.

    ``orientations=(theta_a, theta_b)`` (face -> reversed flag) restricts the
    search to isomorphisms carrying the chosen orientation of ``a`` onto that
    of ``b``.
    """
    if a.counts() != b.counts():
        return
    if sorted(vertex_degree(a, v) for v in a.vertices) != sorted(
            vertex_degree(b, v) for v in b.vertices):
        return
    search = _Search(a, b, orientations)
    if sorted(search.ca.values()) != sorted(search.cb.values()):
        return
    if _signature(a, search.ca) != _signature(b, search.cb):
        return
    yield from search.run()


def find_isomorphism(a: Complex2, b: Complex2, *, orientations=None,
                     accept: Optional[Callable[[Morphism], bool]] = None) -> Optional[Morphism]:
    """Some isomorphism ``a -> b`` (optionally satisfying ``accept``), or ``None``."""
    for phi in iter_isomorphisms(a, b, orientations):
        if accept is None or accept(phi):
            return phi
    return None
