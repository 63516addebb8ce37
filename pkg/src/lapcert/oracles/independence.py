"""Exact independence number by branch and bound over vertex bitmasks."""

from __future__ import annotations

from ..graph import Graph


def _clique_cover_bound(adj: tuple[int, ...], cand: int) -> int:
    """Size of a greedy clique cover of ``cand``; no independent set exceeds it."""
    cliques: list[int] = []  # common-neighbourhood masks of the cliques built so far
    m = cand
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        for k, common in enumerate(cliques):
            if common >> v & 1:
                cliques[k] = common & adj[v]
                break
        else:
            cliques.append(adj[v])
    return len(cliques)


def max_independent_set(g: Graph) -> int:
    """Bitmask of one maximum independent set."""
    adj = g.adj_masks
    best_mask = 0
    best_size = 0

    def search(cand: int, chosen: int, size: int) -> None:
        nonlocal best_mask, best_size
        # vertices with no neighbour left in cand can always be taken
        m = cand
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            if not adj[v] & cand:
                chosen |= low
                cand ^= low
                size += 1
        if not cand:
            if size > best_size:
                best_size, best_mask = size, chosen
            return
        if size + _clique_cover_bound(adj, cand) <= best_size:
            return
        # branch on the vertex with most neighbours inside cand
        v = max(
            (u for u in range(g.n) if cand >> u & 1),
            key=lambda u: (adj[u] & cand).bit_count(),
        )
        bit = 1 << v
        search(cand & ~adj[v] & ~bit, chosen | bit, size + 1)
        search(cand & ~bit, chosen, size)

    search((1 << g.n) - 1, 0, 0)
    return best_mask


def alpha_exact(g: Graph) -> int:
    return max_independent_set(g).bit_count()
