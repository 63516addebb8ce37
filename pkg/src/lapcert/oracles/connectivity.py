"""Vertex and edge connectivity by max-flow.

Vertex connectivity splits every vertex v into ``2v`` (in) and ``2v+1`` (out)
joined by a unit arc; an edge {u, v} becomes the arcs ``u_out -> v_in`` and
``v_out -> u_in`` with capacity n. Only pairs (i, j) with ``i <= current
best`` need to be tried: some vertex among the first ``kappa + 1`` survives
any minimum separator.
"""

from __future__ import annotations

import numpy as np
from scipy.sparse import csr_array
from scipy.sparse.csgraph import maximum_flow

from ..graph import Graph, is_connected


def _split_network(g: Graph) -> csr_array:
    n = g.n
    rows, cols, caps = [], [], []
    for v in range(n):
        rows.append(2 * v)
        cols.append(2 * v + 1)
        caps.append(1)
    for u, v in g.edges:
        rows += [2 * u + 1, 2 * v + 1]
        cols += [2 * v, 2 * u]
        caps += [n, n]
    return csr_array((np.array(caps, dtype=np.int32), (rows, cols)), shape=(2 * n, 2 * n))


def _edge_network(g: Graph) -> csr_array:
    rows, cols = [], []
    for u, v in g.edges:
        rows += [u, v]
        cols += [v, u]
    data = np.ones(len(rows), dtype=np.int32)
    return csr_array((data, (rows, cols)), shape=(g.n, g.n))


def local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally disjoint s-t paths for non-adjacent s, t."""
    net = _split_network(g)
    return int(maximum_flow(net, 2 * s + 1, 2 * t).flow_value)


def kappa_exact(g: Graph) -> int:
    """Vertex connectivity; ``n - 1`` for complete graphs and 0 if disconnected."""
    n = g.n
    if n <= 1:
        return 0
    if not is_connected(g):
        return 0
    if g.is_complete():
        return n - 1
    net = _split_network(g)
    best = min(g.degrees)
    i = 0
    while i <= best and i < n:
        for j in range(i + 1, n):
            if g.has_edge(i, j):
                continue
            flow = int(maximum_flow(net, 2 * i + 1, 2 * j).flow_value)
            best = min(best, flow)
        i += 1
    return best


def kappa_prime_exact(g: Graph) -> int:
    """Edge connectivity: the smallest max-flow from vertex 0 to any other vertex."""
    if g.n <= 1:
        return 0
    if not is_connected(g):
        return 0
    net = _edge_network(g)
    return min(int(maximum_flow(net, 0, t).flow_value) for t in range(1, g.n))
