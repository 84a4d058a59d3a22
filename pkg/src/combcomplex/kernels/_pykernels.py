"""Pure-Python versions of the inner loops in :mod:`combcomplex.kernels`.

All functions work on the dense encoding built by ``Complex2.dense``:
vertices, edges and faces are renumbered ``0..n-1``, dart ``2*e`` runs
slot A to slot B of edge ``e`` and dart ``2*e + 1`` runs back, and the face
walks are stored back to back in ``walks`` with ``offsets[f]:offsets[f+1]``
delimiting face ``f``.
"""


def edge_occurrences(n_edges, walks):
    counts = [0] * n_edges
    for x in walks:
        counts[x >> 1] += 1
    return counts


def _find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def link_components(n_vertices, dart_tail, walks, offsets):
    """Count the connected components of the link of every vertex.

    The link nodes at ``v`` are the darts leaving ``v``.  Each corner of a
    face walk (incoming dart ``a``, outgoing dart ``b``) joins ``a ^ 1`` and
    ``b``.  Vertices without incident edges get a count of zero.
    """
    n_darts = len(dart_tail)
    parent = list(range(n_darts))
    for f in range(len(offsets) - 1):
        lo, hi = offsets[f], offsets[f + 1]
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
    counts = [0] * n_vertices
    seen = [False] * n_darts
    for x in range(n_darts):
        r = _find(parent, x)
        if not seen[r]:
            seen[r] = True
            counts[dart_tail[x]] += 1
    return counts


def orient_faces(n_edges, walks, offsets):
    """Propagate face orientations across shared edges.

    Returns a list of flip flags (1 = reversed) or ``None`` when two
    occurrences of an edge force a contradiction.  Only the first two
    occurrences of each edge are considered; callers check that no edge
    occurs more often.  Each connected piece is seeded at its lowest face
    with flag 0.
    """
    n_faces = len(offsets) - 1
    occ_face = [-1] * (2 * n_edges)
    occ_dart = [0] * (2 * n_edges)
    for f in range(n_faces):
        for k in range(offsets[f], offsets[f + 1]):
            x = walks[k]
            slot = 2 * (x >> 1)
            if occ_face[slot] >= 0:
                slot += 1
                if occ_face[slot] >= 0:
                    continue
            occ_face[slot] = f
            occ_dart[slot] = x
    flips = [-1] * n_faces
    stack = []
    for seed in range(n_faces):
        if flips[seed] >= 0:
            continue
        flips[seed] = 0
        stack.append(seed)
        while stack:
            f = stack.pop()
            rf = flips[f]
            for k in range(offsets[f], offsets[f + 1]):
                x = walks[k]
                slot = 2 * (x >> 1)
                g0, g1 = occ_face[slot], occ_face[slot + 1]
                if g1 < 0:
                    continue
                y0, y1 = occ_dart[slot], occ_dart[slot + 1]
                # the occurrence at hand is one of the two slots
                if g0 == f and y0 == x:
                    g, y = g1, y1
                else:
                    g, y = g0, y0
                need = rf ^ ((x ^ y) & 1) ^ 1
                if flips[g] < 0:
                    flips[g] = need
                    stack.append(g)
                elif flips[g] != need:
                    return None
    return flips
