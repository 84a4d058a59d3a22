"""Inner loops of surface recognition and orientation.

The compiled extension ``_ckernels`` is used when it was built; otherwise
the pure-Python module is used.  Setting ``COMBCOMPLEX_PURE_PYTHON=1``
forces the fallback.  Both backends take ``array('q')`` inputs.
"""

import os
from array import array

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if not os.environ.get("COMBCOMPLEX_PURE_PYTHON"):
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        pass
    else:
        _impl = _ckernels
        BACKEND = "cython"


def as_array(values):
    """Pack integers into the buffer type both backends accept."""
    if isinstance(values, array) and values.typecode == "q":
        return values
    return array("q", values)


def edge_occurrences(n_edges, walks):
    return _impl.edge_occurrences(n_edges, as_array(walks))


def link_components(n_vertices, dart_tail, walks, offsets):
    return _impl.link_components(
        n_vertices, as_array(dart_tail), as_array(walks), as_array(offsets)
    )


def orient_faces(n_edges, walks, offsets):
    return _impl.orient_faces(n_edges, as_array(walks), as_array(offsets))


def backends():
    """Return ``{name: module}`` for every backend available here."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
