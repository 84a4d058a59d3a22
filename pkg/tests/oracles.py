"""Slow, independent reference implementations used as test oracles."""

from itertools import product

import networkx as nx

from combcomplex import Complex2


def circle_oracle(n_vertices, edges):
    """Connected, nonempty, every vertex of degree two (loops count twice)."""
    if not edges:
        return False
    deg = [0] * n_vertices
    g = nx.MultiGraph()
    g.add_nodes_from(range(n_vertices))
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
        g.add_edge(a, b)
    return all(d == 2 for d in deg) and nx.is_connected(g)


def _key(g):
    loops = sorted(nx.number_of_selfloops(g.subgraph([v])) for v in g)
    simple = nx.Graph(g)
    return (sorted(d for _, d in g.degree()), loops,
            nx.weisfeiler_lehman_graph_hash(simple, iterations=3))


def connected_multigraphs(max_edges):
    """Connected multigraphs (loops allowed) by edge count, one per isomorphism class.

    Grown one edge at a time: every connected graph loses a non-bridge edge
    or a leaf and stays connected, so augmentation reaches all of them.
    """
    start = nx.MultiGraph()
    start.add_node(0)
    levels = [[start]]
    for _ in range(max_edges):
        buckets = {}
        found = []
        for g in levels[-1]:
            n = g.number_of_nodes()
            moves = [(a, b) for a in range(n) for b in range(a, n)] + [(a, n) for a in range(n)]
            for a, b in moves:
                h = g.copy()
                h.add_edge(a, b)
                bucket = buckets.setdefault(repr(_key(h)), [])
                if not any(nx.is_isomorphic(h, o) for o in bucket):
                    bucket.append(h)
                    found.append(h)
        levels.append(found)
    return levels


def small_graphs(max_edges=6):
    """Every multigraph with at most ``max_edges`` edges up to isomorphism, given as
    ``(n_vertices, edges)``; at most two isolated vertices are added."""
    levels = connected_multigraphs(max_edges)
    parts = [(m, g) for m in range(1, max_edges + 1) for g in levels[m]]

    def multisets(i, budget):
        yield []
        for j in range(i, len(parts)):
            m, g = parts[j]
            if m <= budget:
                for rest in multisets(j, budget - m):
                    yield [g] + rest

    for combo in multisets(0, max_edges):
        for isolated in range(3):
            if not combo and not isolated:
                continue
            edges, offset = [], 0
            for g in combo:
                edges += [(a + offset, b + offset) for a, b, _ in g.edges(keys=True)]
                offset += g.number_of_nodes()
            yield offset + isolated, edges


def link_graph(c: Complex2, v: int) -> nx.MultiGraph:
    """Link at ``v``: one node per edge-end at ``v``, one edge per corner."""
    g = nx.MultiGraph()
    for e, (a, b) in c.edges.items():
        if a == v:
            g.add_node((e, 0))
        if b == v:
            g.add_node((e, 1))
    for walk in c.faces.values():
        n = len(walk)
        for i in range(n):
            into, out = walk[i - 1], walk[i]
            # ``into`` arrives at v through its head end; ``out`` leaves through its tail end
            head_end = (into >> 1, 0 if into & 1 else 1)
            tail_end = (out >> 1, 1 if out & 1 else 0)
            if c.edges[tail_end[0]][tail_end[1]] == v:
                g.add_edge(head_end, tail_end)
    return g


def closed_surface_oracle(c: Complex2) -> bool:
    if not c.faces:
        return False
    count = {e: 0 for e in c.edges}
    for walk in c.faces.values():
        for x in walk:
            count[x >> 1] += 1
    if any(k != 2 for k in count.values()):
        return False
    for v in c.vertices:
        g = link_graph(c, v)
        if g.number_of_nodes() == 0:
            return False
        if any(d != 2 for _, d in g.degree()) or not nx.is_connected(g):
            return False
    return True


def all_orientations(c: Complex2):
    faces = sorted(c.faces)
    for bits in product((False, True), repeat=len(faces)):
        yield dict(zip(faces, bits))
