# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the inner loops; see ``_pykernels`` for the contract."""

from cpython.mem cimport PyMem_Malloc, PyMem_Free


def edge_occurrences(Py_ssize_t n_edges, const long long[:] walks):
    cdef Py_ssize_t k
    cdef list counts = [0] * n_edges
    cdef long long *buf = <long long *>PyMem_Malloc((n_edges + 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    try:
        for k in range(n_edges):
            buf[k] = 0
        for k in range(walks.shape[0]):
            buf[walks[k] >> 1] += 1
        for k in range(n_edges):
            counts[k] = buf[k]
    finally:
        PyMem_Free(buf)
    return counts


cdef inline Py_ssize_t _find(Py_ssize_t *parent, Py_ssize_t x) nogil:
    cdef Py_ssize_t root = x
    cdef Py_ssize_t nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


def link_components(Py_ssize_t n_vertices, const long long[:] dart_tail,
                    const long long[:] walks, const long long[:] offsets):
    cdef Py_ssize_t n_darts = dart_tail.shape[0]
    cdef Py_ssize_t n_faces = offsets.shape[0] - 1
    cdef Py_ssize_t f, k, lo, hi, x, r, ra, rb
    cdef long long prev, cur
    cdef list counts = [0] * n_vertices
    cdef Py_ssize_t *parent = <Py_ssize_t *>PyMem_Malloc((n_darts + 1) * sizeof(Py_ssize_t))
    cdef char *seen = <char *>PyMem_Malloc(n_darts + 1)
    cdef long long *tally = <long long *>PyMem_Malloc((n_vertices + 1) * sizeof(long long))
    if parent == NULL or seen == NULL or tally == NULL:
        PyMem_Free(parent)
        PyMem_Free(seen)
        PyMem_Free(tally)
        raise MemoryError()
    try:
        with nogil:
            for x in range(n_darts):
                parent[x] = x
                seen[x] = 0
            for x in range(n_vertices):
                tally[x] = 0
            for f in range(n_faces):
                lo = offsets[f]
                hi = offsets[f + 1]
                if lo == hi:
                    continue
                prev = walks[hi - 1]
                for k in range(lo, hi):
                    cur = walks[k]
                    ra = _find(parent, prev ^ 1)
                    rb = _find(parent, cur)
                    if ra != rb:
                        parent[ra] = rb
                    prev = cur
            for x in range(n_darts):
                r = _find(parent, x)
                if not seen[r]:
                    seen[r] = 1
                    tally[dart_tail[x]] += 1
        for x in range(n_vertices):
            counts[x] = tally[x]
    finally:
        PyMem_Free(parent)
        PyMem_Free(seen)
        PyMem_Free(tally)
    return counts


def orient_faces(Py_ssize_t n_edges, const long long[:] walks, const long long[:] offsets):
    cdef Py_ssize_t n_faces = offsets.shape[0] - 1
    cdef Py_ssize_t f, g, g0, g1, k, slot, seed, top
    cdef long long x, y, y0, y1, rf, need
    cdef bint failed = 0
    cdef Py_ssize_t *occ_face = <Py_ssize_t *>PyMem_Malloc((2 * n_edges + 2) * sizeof(Py_ssize_t))
    cdef long long *occ_dart = <long long *>PyMem_Malloc((2 * n_edges + 2) * sizeof(long long))
    cdef long long *flips = <long long *>PyMem_Malloc((n_faces + 1) * sizeof(long long))
    cdef Py_ssize_t *stack = <Py_ssize_t *>PyMem_Malloc((n_faces + 1) * sizeof(Py_ssize_t))
    if occ_face == NULL or occ_dart == NULL or flips == NULL or stack == NULL:
        PyMem_Free(occ_face)
        PyMem_Free(occ_dart)
        PyMem_Free(flips)
        PyMem_Free(stack)
        raise MemoryError()
    try:
        with nogil:
            for k in range(2 * n_edges):
                occ_face[k] = -1
                occ_dart[k] = 0
            for f in range(n_faces):
                flips[f] = -1
                for k in range(offsets[f], offsets[f + 1]):
                    x = walks[k]
                    slot = 2 * (x >> 1)
                    if occ_face[slot] >= 0:
                        slot += 1
                        if occ_face[slot] >= 0:
                            continue
                    occ_face[slot] = f
                    occ_dart[slot] = x
            for seed in range(n_faces):
                if failed:
                    break
                if flips[seed] >= 0:
                    continue
                flips[seed] = 0
                top = 0
                stack[top] = seed
                top += 1
                while top > 0 and not failed:
                    top -= 1
                    f = stack[top]
                    rf = flips[f]
                    for k in range(offsets[f], offsets[f + 1]):
                        x = walks[k]
                        slot = 2 * (x >> 1)
                        g0 = occ_face[slot]
                        g1 = occ_face[slot + 1]
                        if g1 < 0:
                            continue
                        y0 = occ_dart[slot]
                        y1 = occ_dart[slot + 1]
                        if g0 == f and y0 == x:
                            g = g1
                            y = y1
                        else:
                            g = g0
                            y = y0
                        need = rf ^ ((x ^ y) & 1) ^ 1
                        if flips[g] < 0:
                            flips[g] = need
                            stack[top] = g
                            top += 1
                        elif flips[g] != need:
                            failed = 1
                            break
        if failed:
            return None
        return [flips[f] for f in range(n_faces)]
    finally:
        PyMem_Free(occ_face)
        PyMem_Free(occ_dart)
        PyMem_Free(flips)
        PyMem_Free(stack)
