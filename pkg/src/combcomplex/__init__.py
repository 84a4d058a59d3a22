"""Combinatorial 2-complexes: recognition of circles, surfaces, spheres and
discs, coherent orientations, maps on the sphere, contiguity graphs and
estimating complexes of arc systems."""

__version__ = "0.1.0"

from .core import (
    Complex2, ComplexBuilder, ComplexError, ComplexValidationError, DomainMismatchError,
    Morphism, Names, UnknownCellError, ValidationReport, Violation, compose, connected_components,
    dart, edge_of, euler_characteristic, face_degree, identity, inclusion, invert_morphism,
    inverse, is_connected, make_complex, relabel, validate_complex, vertex_degree,
    vertex_partition,
)
from .paths import (
    ArcRec, CycleClass, PathError, PathSeq, arc_from_darts, classify_cycle, classify_path,
    concat, covers_cycle, cycle_from_darts, cycle_of, invert, iter_simple_cycles, make_arc,
    make_path, maximal_arcs, path_from_darts, subpath_of_cycle, trivial_cycle, trivial_path,
)
from .surface import (
    NotASurfaceError, OrientationChoice, OrientedFace, find_coherent_orientation, is_closed_surface,
    is_coherent, is_combinatorial_circle, is_combinatorial_disc, is_combinatorial_sphere,
    is_combinatorial_surface, is_orientable, recognize,
)
from .isomorphism import find_isomorphism, iter_isomorphisms
from .maps import (
    ClosureResult, InvalidMapError, MapStruct, classify_arc, classify_map, cut_out,
    find_map_isomorphism, make_map, spherical_closure, spherical_map, submap, trivial_map,
    verify_pasting,
)
from .analysis import (
    ArcSystem, ContiguityResult, EstimatingResult, InvalidArcSystemError, check_arc_system,
    check_planar_bound, contiguity_graph, estimating_complex, factor_boundary,
    validate_arc_system,
)
from .generators import (
    GenOp, polygon_double, random_arc_system, random_sphere, replay, split_face, subdivide_edge,
)
from .textio import (
    ParseError, export_dot, parse_arcs, parse_complex, parse_cycle, parse_map,
    serialize_complex, serialize_map,
)
