"""Recognising circles, surfaces, spheres and discs; orienting surfaces.

A 2-complex is a surface when every edge occurs once or twice in the face
walks and the link at every vertex (its corners glued along edge-ends) is
a single circle or a single arc.  Spheres and discs are then told apart by
connectedness, boundary and the Euler characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Mapping, NamedTuple, Optional, Tuple

from . import kernels
from .core import Complex2, ComplexError, euler_characteristic, is_connected
from .paths import CycleClass


class NotASurfaceError(ComplexError):
    pass


def is_combinatorial_circle(c: Complex2) -> bool:
    if c.faces:
        raise ComplexError("expected a 1-complex; pass the 1-skeleton")
    if not c.edges or len(c.vertices) != len(c.edges):
        return False
    if any(len(c.out_darts[v]) != 2 for v in c.vertices):
        return False
    return is_connected(c)


def edge_occurrences(c: Complex2) -> Dict[int, int]:
    d = c.dense
    counts = kernels.edge_occurrences(len(d.edge_ids), d.walks)
    return dict(zip(d.edge_ids, counts))


def link_components(c: Complex2) -> Dict[int, int]:
    """Number of connected pieces of the link at every vertex."""
    d = c.dense
    counts = kernels.link_components(len(d.vertex_ids), d.dart_tail, d.walks, d.offsets)
    return dict(zip(d.vertex_ids, counts))


def _links_ok(c: Complex2, allowed) -> bool:
    if not c.faces:
        return False
    occ = edge_occurrences(c)
    if any(k not in allowed for k in occ.values()):
        return False
    return all(k == 1 for k in link_components(c).values())


def is_closed_surface(c: Complex2) -> bool:
    return _links_ok(c, (2,))


def is_combinatorial_surface(c: Complex2) -> bool:
    """Closed surface or surface with boundary."""
    return _links_ok(c, (1, 2))


def boundary_edges(c: Complex2):
    return sorted(e for e, k in edge_occurrences(c).items() if k == 1)


def is_combinatorial_sphere(c: Complex2) -> bool:
    return (is_closed_surface(c) and is_connected(c)
            and euler_characteristic(c) == 2)


def is_combinatorial_disc(c: Complex2) -> bool:
    if not is_combinatorial_surface(c) or not is_connected(c):
        return False
    if euler_characteristic(c) != 1:
        return False
    rim = boundary_edges(c)
    if not rim:
        return False
    verts = {v for e in rim for v in c.edges[e]}
    return is_combinatorial_circle(c.subcomplex(verts, rim, (), dim=1))


class Recognition(NamedTuple):
    circle: bool
    closed_surface: bool
    surface: bool
    sphere: bool
    disc: bool


def recognize(c: Complex2) -> Recognition:
    return Recognition(
        False if c.faces else is_combinatorial_circle(c),
        is_closed_surface(c),
        is_combinatorial_surface(c),
        is_combinatorial_sphere(c),
        is_combinatorial_disc(c),
    )


# -- orientation -------------------------------------------------------------


class OrientedFace(NamedTuple):
    face: int
    reversed: bool = False

    def inverse(self) -> "OrientedFace":
        return OrientedFace(self.face, not self.reversed)


def oriented_walk(c: Complex2, of: OrientedFace) -> Tuple[int, ...]:
    walk = c.faces[of.face]
    if of.reversed:
        return tuple(x ^ 1 for x in reversed(walk))
    return walk


def boundary_cycle(c: Complex2, of: OrientedFace) -> CycleClass:
    walk = oriented_walk(c, of)
    return CycleClass.from_cyclic(walk, [c.tail(x) for x in walk])


@dataclass(frozen=True)
class OrientationChoice:
    """``flags[f]`` is True when face ``f`` is taken against its stored walk."""

    flags: Mapping[int, bool] = field(default_factory=dict)

    def __getitem__(self, f: int) -> bool:
        return bool(self.flags.get(f, False))

    def oriented(self, f: int) -> OrientedFace:
        return OrientedFace(f, self[f])

    def flipped(self) -> "OrientationChoice":
        return OrientationChoice({f: not r for f, r in self.flags.items()})

    def restrict(self, faces) -> "OrientationChoice":
        keep = set(faces)
        return OrientationChoice({f: r for f, r in self.flags.items() if f in keep})

    def contour(self, c: Complex2, f: int) -> CycleClass:
        return boundary_cycle(c, self.oriented(f))


def chosen_darts(c: Complex2, theta: OrientationChoice):
    for f in sorted(c.faces):
        yield from oriented_walk(c, theta.oriented(f))


def is_coherent(c: Complex2, theta: OrientationChoice) -> bool:
    seen = set()
    for x in chosen_darts(c, theta):
        if x in seen:
            return False
        seen.add(x)
    return True


def find_coherent_orientation(c: Complex2) -> Optional[OrientationChoice]:
    """Coherent orientation seeded as-stored at the lowest face of each piece."""
    if not is_combinatorial_surface(c):
        raise NotASurfaceError("complex is not a combinatorial surface")
    d = c.dense
    flips = kernels.orient_faces(len(d.edge_ids), d.walks, d.offsets)
    if flips is None:
        return None
    theta = OrientationChoice({f: bool(r) for f, r in zip(d.face_ids, flips)})
    return theta if is_coherent(c, theta) else None


def is_orientable(c: Complex2) -> bool:
    return find_coherent_orientation(c) is not None

