"""Line-oriented text format for complexes, maps, arc systems and cycles.

::

    complex2
    # comments run to the end of the line
    vertex a
    edge ab a b
    face top = ab+ bc+ ca+
    orientation top -        # map files only; default +
    contour = ab- ...        # map files only
    arc = ab+ bc+            # arc files
    cycle = ab+ bc+ ca+      # cycle files

A dart is an edge name followed by ``+`` (slot A to slot B) or ``-``.
Ids are assigned densely in order of appearance; names are kept for output.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from .analysis import ContiguityResult
from .core import (
    Complex2, ComplexError, ComplexValidationError, Names, Violation, validate_complex,
)
from .maps import InvalidMapError, MapStruct, map_violations, spherical_map, trivial_map
from .paths import ArcRec, CycleClass, PathError, cycle_from_darts, make_arc, path_from_darts
from .surface import OrientationChoice

HEADER = "complex2"
_NAME = re.compile(r"[^\s#=+\-][^\s#=]*")


class ParseError(ComplexError):
    def __init__(self, line: int, col: int, message: str):
        self.line, self.col = line, col
        super().__init__(f"line {line}, col {col}: {message}")


@dataclass
class Document:
    """Raw parse of a file, before the cells are checked."""

    complex: Complex2
    orientation: Dict[int, bool] = field(default_factory=dict)
    contours: List[Tuple[int, Tuple[int, ...]]] = field(default_factory=list)
    arcs: List[Tuple[int, Tuple[int, ...]]] = field(default_factory=list)
    cycles: List[Tuple[int, Tuple[int, ...]]] = field(default_factory=list)


def _tokens(raw: str):
    """Yield ``(col, token)`` pairs with comments stripped; col is 1-based."""
    body = raw.split("#", 1)[0]
    for m in re.finditer(r"\S+", body):
        yield m.start() + 1, m.group()


class _Reader:
    def __init__(self, base: Optional[Complex2] = None):
        self.vertex: Dict[str, int] = {}
        self.edge: Dict[str, int] = {}
        self.face: Dict[str, int] = {}
        self.edges: Dict[int, Tuple[int, int]] = {}
        self.faces: Dict[int, Tuple[int, ...]] = {}
        self.doc_orient: Dict[int, bool] = {}
        self.lists = {"contour": [], "arc": [], "cycle": []}
        self.base = base
        if base is not None:
            self.edge = {base.edge_name(e): e for e in base.edges}
            self.face = {base.face_name(f): f for f in base.faces}

    def _name(self, lineno, col, tok, table, kind, new):
        if not _NAME.fullmatch(tok):
            raise ParseError(lineno, col, f"bad {kind} name {tok!r}")
        if new and tok in table:
            raise ParseError(lineno, col, f"duplicate {kind} {tok!r}")
        if not new and tok not in table:
            raise ParseError(lineno, col, f"unknown {kind} {tok!r}")
        return tok

    def _darts(self, lineno, toks):
        out = []
        for col, tok in toks:
            if len(tok) < 2 or tok[-1] not in "+-":
                raise ParseError(lineno, col, f"expected <edge>+ or <edge>-, got {tok!r}")
            name = self._name(lineno, col, tok[:-1], self.edge, "edge", False)
            out.append(2 * self.edge[name] + (tok[-1] == "-"))
        return tuple(out)

    def _after_equals(self, lineno, toks, at):
        if len(toks) <= at or toks[at][1] != "=":
            col = toks[at][0] if len(toks) > at else (toks[-1][0] + len(toks[-1][1]))
            raise ParseError(lineno, col, "expected '='")
        return toks[at + 1:]

    def line(self, lineno: int, toks):
        col, key = toks[0]
        if key == "vertex" and self.base is None:
            if len(toks) != 2:
                raise ParseError(lineno, col, "usage: vertex <name>")
            name = self._name(lineno, toks[1][0], toks[1][1], self.vertex, "vertex", True)
            self.vertex[name] = len(self.vertex)
        elif key == "edge" and self.base is None:
            if len(toks) != 4:
                raise ParseError(lineno, col, "usage: edge <name> <v1> <v2>")
            name = self._name(lineno, toks[1][0], toks[1][1], self.edge, "edge", True)
            ends = []
            for c, t in toks[2:]:
                if t not in self.vertex:
                    raise ParseError(lineno, c, f"dangling endpoint: unknown vertex {t!r}")
                ends.append(self.vertex[t])
            self.edge[name] = len(self.edge)
            self.edges[self.edge[name]] = tuple(ends)
        elif key == "face" and self.base is None:
            if len(toks) < 2:
                raise ParseError(lineno, col, "usage: face <name> = <darts>")
            name = self._name(lineno, toks[1][0], toks[1][1], self.face, "face", True)
            walk = self._darts(lineno, self._after_equals(lineno, toks, 2))
            self.face[name] = len(self.face)
            self.faces[self.face[name]] = walk
        elif key == "orientation":
            if len(toks) != 3 or toks[2][1] not in "+-":
                raise ParseError(lineno, col, "usage: orientation <face> <+|->")
            name = self._name(lineno, toks[1][0], toks[1][1], self.face, "face", False)
            self.doc_orient[self.face[name]] = toks[2][1] == "-"
        elif key in self.lists:
            self.lists[key].append((lineno, self._darts(lineno, self._after_equals(lineno, toks, 1))))
        else:
            raise ParseError(lineno, col, f"unexpected keyword {key!r}")


def parse_document(text: str, base: Optional[Complex2] = None) -> Document:
    """Parse a file.  With ``base`` only orientation/contour/arc/cycle lines are allowed
    and they refer to the cells of ``base``."""
    reader = _Reader(base)
    seen_header = base is not None
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = list(_tokens(raw))
        if not toks:
            continue
        if not seen_header:
            if toks[0][1] != HEADER or len(toks) != 1:
                raise ParseError(lineno, toks[0][0], f"expected header {HEADER!r}")
            seen_header = True
            continue
        if toks[0][1] == HEADER and base is not None:
            continue
        reader.line(lineno, toks)
    if not seen_header:
        raise ParseError(1, 1, f"expected header {HEADER!r}")
    if base is not None:
        c = base
    else:
        if not reader.vertex:
            raise ComplexValidationError(
                [Violation("empty vertex set", "complex", "-", "file declares no vertex")])
        names = Names({i: n for n, i in reader.vertex.items()},
                      {i: n for n, i in reader.edge.items()},
                      {i: n for n, i in reader.face.items()})
        dim = 2 if reader.faces else (1 if reader.edges else 0)
        c = Complex2(tuple(range(len(reader.vertex))), reader.edges, reader.faces, dim, names)
        report = validate_complex(c)
        if not report.ok:
            raise ComplexValidationError(report.violations)
    return Document(c, reader.doc_orient, reader.lists["contour"],
                    reader.lists["arc"], reader.lists["cycle"])


def parse_complex(text: str) -> Complex2:
    return parse_document(text).complex


def _cycle(c: Complex2, lineno: int, darts) -> CycleClass:
    try:
        cyc = cycle_from_darts(c, darts)
    except PathError as exc:
        raise ParseError(lineno, 1, str(exc)) from None
    return cyc


def parse_map(text: str) -> MapStruct:
    doc = parse_document(text)
    c = doc.complex
    if not doc.contours and not doc.orientation:
        return spherical_map(c)
    theta = OrientationChoice({f: doc.orientation.get(f, False) for f in c.faces})
    contours = []
    for lineno, darts in doc.contours:
        if not darts:
            if c.edges or len(c.vertices) != 1:
                raise ParseError(lineno, 1, "an empty contour needs a one-vertex map")
            return trivial_map(c.vertices[0], c.names)
        contours.append(_cycle(c, lineno, darts))
    m = MapStruct(c, theta, tuple(sorted(contours)))
    bad = map_violations(m)
    if bad:
        raise InvalidMapError("; ".join(bad))
    return m


def parse_arcs(text: str, d: Complex2) -> List[ArcRec]:
    doc = parse_document(text, base=d)
    out = []
    for lineno, darts in doc.arcs:
        try:
            out.append(make_arc(d, path_from_darts(d, darts)))
        except PathError as exc:
            raise ParseError(lineno, 1, str(exc)) from None
    return out


def parse_cycle(text: str, d: Complex2) -> CycleClass:
    doc = parse_document(text, base=d)
    if len(doc.cycles) != 1:
        raise ParseError(1, 1, f"expected one cycle line, found {len(doc.cycles)}")
    lineno, darts = doc.cycles[0]
    return _cycle(d, lineno, darts)


# -- output --------------------------------------------------------------------


def _unique(ids, named, prefix):
    """Names for ``ids``, falling back to ``prefix+id`` and disambiguating clashes."""
    out, taken = {}, set()
    for i in sorted(ids):
        name = named.get(i) or f"{prefix}{i}"
        while name in taken:
            name = f"{name}_{i}"
        taken.add(name)
        out[i] = name
    return out


def _labels(c: Complex2):
    return (_unique(c.vertices, c.names.vertex, "v"),
            _unique(c.edges, c.names.edge, "e"),
            _unique(c.faces, c.names.face, "f"))


def _dart_text(edge_names, darts: Iterable[int]) -> str:
    return " ".join(f"{edge_names[x >> 1]}{'-' if x & 1 else '+'}" for x in darts)


def dart_text(c: Complex2, darts: Iterable[int]) -> str:
    """Darts of ``c`` written as ``<edge><+|->`` tokens."""
    return _dart_text(_labels(c)[1], darts)


def serialize_complex(c: Complex2, comments: Iterable[str] = ()) -> str:
    vn, en, fn = _labels(c)
    lines = [HEADER]
    lines += [f"# {s}" for s in comments]
    lines += [f"vertex {vn[v]}" for v in sorted(c.vertices)]
    lines += [f"edge {en[e]} {vn[a]} {vn[b]}" for e, (a, b) in sorted(c.edges.items())]
    lines += [f"face {fn[f]} = {_dart_text(en, w)}" for f, w in sorted(c.faces.items())]
    return "\n".join(lines) + "\n"


def serialize_map(m: MapStruct, comments: Iterable[str] = ()) -> str:
    c = m.complex
    _, en, fn = _labels(c)
    lines = [serialize_complex(c, comments).rstrip("\n")]
    lines += [f"orientation {fn[f]} {'-' if m.orientation[f] else '+'}" for f in sorted(c.faces)]
    lines += [f"contour = {_dart_text(en, cyc.steps)}".rstrip() for cyc in m.contours]
    return "\n".join(lines) + "\n"


def serialize_arcs(d: Complex2, arcs: Iterable[ArcRec]) -> str:
    _, en, _ = _labels(d)
    return "".join(f"arc = {_dart_text(en, a.path.steps)}\n" for a in sorted(arcs))


def serialize_cycle(d: Complex2, cyc: CycleClass) -> str:
    _, en, _ = _labels(d)
    return f"cycle = {_dart_text(en, cyc.steps)}\n"


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g, name: str = "G") -> str:
    """Undirected DOT text for a 1-complex or a contiguity result."""
    if isinstance(g, ContiguityResult):
        g = g.graph
    if g.faces:
        raise ComplexError("export_dot expects a 1-complex")
    vn, en, _ = _labels(g)
    lines = [f"graph {name} {{"]
    lines += [f"  n{v} [label={_quote(vn[v])}];" for v in sorted(g.vertices)]
    lines += [f"  n{a} -- n{b} [label={_quote(en[e])}];" for e, (a, b) in sorted(g.edges.items())]
    lines.append("}")
    return "\n".join(lines) + "\n"
