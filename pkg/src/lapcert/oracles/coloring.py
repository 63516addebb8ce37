"""Exact chromatic number: DSATUR upper bound, then k-colourability search."""

from __future__ import annotations

from ..graph import Graph


def dsatur_coloring(g: Graph) -> list[int]:
    n = g.n
    colors = [-1] * n
    seen: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (len(seen[u]), g.degrees[u], -u),
        )
        c = 0
        while c in seen[v]:
            c += 1
        colors[v] = c
        for w in g.neighbors[v]:
            seen[w].add(c)
    return colors


def _greedy_clique(g: Graph) -> int:
    """Size of a clique grown greedily from each vertex; a lower bound on chi."""
    best = 1 if g.n else 0
    for s in range(g.n):
        clique, cand = 1, g.adj_masks[s]
        while cand:
            v = max(
                (u for u in range(g.n) if cand >> u & 1),
                key=lambda u: (g.adj_masks[u] & cand).bit_count(),
            )
            clique += 1
            cand &= g.adj_masks[v]
        best = max(best, clique)
    return best


def is_k_colorable(g: Graph, k: int) -> list[int] | None:
    """A proper colouring with at most ``k`` colours, or None.

    Picks the uncoloured vertex with the most distinct neighbour colours and
    only ever opens one new colour at a time (colour symmetry breaking).
    """
    n = g.n
    colors = [-1] * n
    nbr_counts = [[0] * k for _ in range(n)]

    def pick() -> int:
        best, key = -1, (-1, -1)
        for u in range(n):
            if colors[u] < 0:
                sat = sum(1 for c in nbr_counts[u] if c)
                kk = (sat, g.degrees[u])
                if kk > key:
                    best, key = u, kk
        return best

    def assign(v: int, c: int, delta: int) -> None:
        for w in g.neighbors[v]:
            nbr_counts[w][c] += delta

    def search(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        for c in range(min(used + 1, k)):
            if nbr_counts[v][c]:
                continue
            colors[v] = c
            assign(v, c, 1)
            if search(done + 1, max(used, c + 1)):
                return True
            assign(v, c, -1)
            colors[v] = -1
        return False

    return colors if search(0, 0) else None


def chi_exact(g: Graph) -> int:
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    upper = max(dsatur_coloring(g)) + 1
    k = max(2, _greedy_clique(g))
    while k < upper:
        if is_k_colorable(g, k) is not None:
            return k
        k += 1
    return upper
