"""Command-line driver: ``combcomplex <command> ...``.

Exit status is 0 on success, 1 when the input fails validation and 2 on
usage errors (bad arguments, unreadable files).
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import __version__
from .analysis import (
    check_planar_bound, contiguity_graph, estimating_complex, validate_arc_system,
)
from .core import ComplexError, ComplexValidationError, euler_characteristic
from .generators import random_sphere
from .maps import cut_out, spherical_closure
from .surface import find_coherent_orientation, recognize
from .textio import (
    dart_text, export_dot, parse_arcs, parse_complex, parse_cycle, parse_document, parse_map,
    serialize_complex, serialize_map,
)

OK, INVALID, USAGE = 0, 1, 2


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(f"{self.prog}: {message}")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from None


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_validate(args, out):
    doc = parse_document(_read(args.file))
    c = doc.complex
    if doc.contours or doc.orientation:
        parse_map(_read(args.file))
    v, e, f = c.counts()
    print(f"ok: {v} vertices, {e} edges, {f} faces", file=out)
    return OK


def cmd_euler(args, out):
    c = parse_complex(_read(args.file))
    v, e, f = c.counts()
    print(f"V = {v}, E = {e}, F = {f}", file=out)
    print(f"chi = {euler_characteristic(c)}", file=out)
    return OK


def cmd_recognize(args, out):
    c = parse_complex(_read(args.file))
    r = recognize(c)
    for name, flag in zip(("circle", "closed_surface", "surface", "sphere", "disc"), r):
        print(f"{name}: {_yes(flag)}", file=out)
    return OK


def cmd_orient(args, out):
    c = parse_complex(_read(args.file))
    theta = find_coherent_orientation(c)
    if theta is None:
        print("not orientable", file=out)
        return INVALID
    for f in sorted(c.faces):
        print(f"orientation {c.face_name(f)} {'-' if theta[f] else '+'}", file=out)
    return OK


def cmd_contiguity(args, out):
    c = parse_document(_read(args.map)).complex
    faces = None
    if args.faces:
        by_name = {c.face_name(f): f for f in c.faces}
        missing = [n for n in args.faces if n not in by_name]
        if missing:
            raise _Usage(f"unknown face(s): {', '.join(missing)}")
        faces = [by_name[n] for n in args.faces]
    res = contiguity_graph(c, faces)
    if args.dot:
        out.write(export_dot(res))
        return OK
    g = res.graph
    for e, (a, b) in sorted(g.edges.items()):
        print(f"{g.vertex_name(a)} -- {g.vertex_name(b)}", file=out)
    bound = check_planar_bound(g)
    print(f"V = {bound.n_vertices}, E = {bound.n_edges}, "
          f"E < 3V: {_yes(bound.holds)}", file=out)
    return OK


def cmd_estimate(args, out):
    d = parse_complex(_read(args.sphere))
    system = validate_arc_system(d, parse_arcs(_read(args.arcs), d))
    res = estimating_complex(system)
    phi = res.phi
    notes = []
    for i, comp in enumerate(res.components):
        members = " ".join(d.vertex_name(v) for v in sorted(comp))
        notes.append(f"alpha0 {phi.vertex_name(res.alpha0[i])} <- {{{members}}}")
    for (k, rev), x in sorted(res.alpha1.items()):
        path = system.arcs[k].oriented()[rev]
        notes.append(f"alpha1 {dart_text(phi, [x])} <- {dart_text(d, path.steps)}")
    for f, j in sorted(res.alpha2.items()):
        notes.append(f"alpha2 {phi.face_name(j)} <- {d.face_name(f)}")
    out.write(serialize_complex(phi, notes))
    return OK


def cmd_closure(args, out):
    m = parse_map(_read(args.map))
    res = spherical_closure(m)
    out.write(serialize_map(res.sphere))
    return OK


def cmd_cutout(args, out):
    m = parse_map(_read(args.map))
    cyc = parse_cycle(_read(args.cycle), m.complex)
    got = cut_out(m, cyc)
    if got is None:
        print("no cut-out (the inverse cycle cuts out)", file=out)
        return OK
    piece, zeta = got
    c = m.complex
    notes = ["cut-out submap; faces map by inclusion"]
    notes += [f"face {piece.complex.face_name(f)} -> {c.face_name(g)}"
              for f, (g, _, _) in sorted(zeta.face_map.items())]
    out.write(serialize_map(piece, notes))
    return OK


def cmd_gen(args, out):
    if args.ops < 0:
        raise _Usage("--ops must be nonnegative")
    m, ops = random_sphere(args.seed, args.ops)
    out.write(serialize_map(m, [f"op {op}" for op in ops]))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="combcomplex", description="Combinatorial 2-complexes and maps.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def add(name, func, help_, *files):
        sp = sub.add_parser(name, help=help_)
        for f in files:
            sp.add_argument(f)
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check a complex or map file", "file")
    add("euler", cmd_euler, "print cell counts and the Euler characteristic", "file")
    add("recognize", cmd_recognize, "circle/surface/sphere/disc flags", "file")
    add("orient", cmd_orient, "find a coherent orientation", "file")
    sp = add("contiguity", cmd_contiguity, "contiguity graph of a face set", "map")
    sp.add_argument("--faces", nargs="+", metavar="FACE")
    sp.add_argument("--dot", action="store_true", help="emit DOT")
    add("estimate", cmd_estimate, "estimating complex of an arc system", "sphere", "arcs")
    add("closure", cmd_closure, "spherical closure of a map", "map")
    add("cutout", cmd_cutout, "cut out the disc bounded by a cycle", "map", "cycle")
    sp = add("gen", cmd_gen, "seeded random sphere")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--ops", type=int, required=True)
    return p


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except _Usage as exc:
        print(exc, file=err)
        return USAGE
    except ComplexValidationError as exc:
        for v in exc.violations:
            print(f"invalid: {v}", file=err)
        return INVALID
    except ComplexError as exc:
        print(f"invalid: {exc}", file=err)
        return INVALID
    except SystemExit as exc:  # --help / --version
        return exc.code or OK


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
