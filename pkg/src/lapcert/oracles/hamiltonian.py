"""Hamilton cycles: exact backtracking for small graphs, Posa rotation-extension beyond."""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..graph import Graph, is_connected

EXACT_CAP = 32


@dataclass(frozen=True)
class HamiltonianResult:
    """``hamiltonian`` is None when the heuristic found nothing beyond the cap."""

    hamiltonian: bool | None
    cycle: tuple[int, ...] | None
    exact: bool


def is_hamilton_cycle(g: Graph, cycle: tuple[int, ...] | list[int]) -> bool:
    if g.n < 3 or sorted(cycle) != list(range(g.n)):
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % g.n]) for i in range(g.n))


def _reachable(adj: tuple[int, ...], start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            m ^= low
            nxt |= adj[low.bit_length() - 1]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _backtrack(g: Graph, max_nodes: int | None) -> tuple[tuple[int, ...] | None, bool]:
    """Return (cycle or None, finished). ``finished`` is False if the node budget ran out."""
    n = g.n
    adj = g.adj_masks
    start = min(range(n), key=lambda v: (g.degrees[v], v))
    full = (1 << n) - 1
    path = [start]
    nodes = 0

    def extend(end: int, visited: int) -> bool | None:
        nonlocal nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            return None
        rest = full & ~visited
        if not rest:
            return bool(adj[end] >> start & 1)
        avail = rest | (1 << end) | (1 << start)
        forced = -1
        m = rest
        while m:
            low = m & -m
            m ^= low
            u = low.bit_length() - 1
            k = (adj[u] & avail).bit_count()
            if k < 2 and rest != low:
                return False
            if rest == low and not (adj[u] >> end & 1 and adj[u] >> start & 1):
                return False
            if k == 2 and end != start and adj[u] >> end & 1 and rest != low:
                if forced >= 0:
                    return False
                forced = u
        if not adj[start] & rest:
            return False
        if _reachable(adj, end, rest | (1 << end)) != rest | (1 << end):
            return False
        if forced >= 0:
            choices = [forced]
        else:
            nb = adj[end] & rest
            choices = sorted(
                (w for w in range(n) if nb >> w & 1),
                key=lambda w: (adj[w] & rest).bit_count(),
            )
        for w in choices:
            path.append(w)
            r = extend(w, visited | (1 << w))
            if r:
                return True
            path.pop()
            if r is None:
                return None
        return False

    r = extend(start, 1 << start)
    if r is None:
        return None, False
    return (tuple(path) if r else None), True


def rotation_extension(g: Graph, seed: int = 0, restarts: int = 20, steps: int | None = None) -> tuple[int, ...] | None:
    """Search for a Hamilton cycle with Posa rotations; None if nothing was found."""
    n = g.n
    if n < 3:
        return None
    rng = random.Random(seed)
    nbrs = [sorted(s) for s in g.neighbors]
    budget = steps if steps is not None else 20 * n * n
    for _ in range(restarts):
        path = [rng.randrange(n)]
        pos = {path[0]: 0}
        for _ in range(budget):
            end = path[-1]
            fresh = [w for w in nbrs[end] if w not in pos]
            if fresh:
                w = min(fresh, key=lambda x: (sum(1 for y in nbrs[x] if y not in pos), rng.random()))
                pos[w] = len(path)
                path.append(w)
                continue
            if len(path) == n and g.has_edge(end, path[0]):
                return tuple(path)
            # rotate: pick a neighbour path[i] of end, reverse the tail after it
            pivots = [pos[w] for w in nbrs[end] if pos[w] < len(path) - 2]
            if not pivots:
                path.reverse()
                pos = {v: k for k, v in enumerate(path)}
                continue
            i = rng.choice(pivots)
            path[i + 1:] = path[:i:-1]
            for k in range(i + 1, len(path)):
                pos[path[k]] = k
            if rng.random() < 0.05:
                path.reverse()
                pos = {v: k for k, v in enumerate(path)}
    return None


def hamiltonian_exact(g: Graph, cap: int = EXACT_CAP, max_nodes: int | None = None, seed: int = 0) -> HamiltonianResult:
    """Decide Hamiltonicity exactly for ``n <= cap``; otherwise try to construct a cycle."""
    if g.n < 3 or not is_connected(g) or min(g.degrees) < 2:
        return HamiltonianResult(False, None, True)
    if g.n <= cap:
        cycle, finished = _backtrack(g, max_nodes)
        if finished:
            return HamiltonianResult(cycle is not None, cycle, True)
    cycle = rotation_extension(g, seed=seed)
    if cycle is not None:
        return HamiltonianResult(True, cycle, True)
    return HamiltonianResult(None, None, False)
