"""Vertex and edge forwarding indices by exhaustive routing search.

A routing assigns one simple path to every ordered pair (u, v), u != v.
The vertex load of v counts paths with v as an interior vertex; the edge
load of {a, b} counts paths traversing it in either direction. The indices
are the minimum over routings of the maximum load, minimised separately.

The search enumerates all simple paths of each pair, takes the greedy
routing as an upper bound, and decides "max load <= L" by depth-first
search for L from a separator lower bound upwards. If that search runs out
of nodes the same problem is solved as a MILP. Results are exact unless the
path cap truncated the enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import permutations

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp
from scipy.sparse import lil_matrix

from ..errors import DomainError
from ..graph import Edge, Graph, is_connected, neighborhood_mask

FORWARDING_CAP = 7
PATH_CAP = 5000
NODE_BUDGET = 50_000


@dataclass(frozen=True)
class Routing:
    n: int
    paths: dict[tuple[int, int], tuple[int, ...]] = field(hash=False)

    def vertex_load(self) -> list[int]:
        load = [0] * self.n
        for p in self.paths.values():
            for v in p[1:-1]:
                load[v] += 1
        return load

    def edge_load(self) -> dict[Edge, int]:
        load: dict[Edge, int] = {}
        for p in self.paths.values():
            for a, b in zip(p, p[1:]):
                e = (a, b) if a < b else (b, a)
                load[e] = load.get(e, 0) + 1
        return load

    def max_vertex_load(self) -> int:
        return max(self.vertex_load(), default=0)

    def max_edge_load(self) -> int:
        return max(self.edge_load().values(), default=0)

    def check(self, g: Graph) -> None:
        """Raise ValueError unless this is a routing of ``g`` with simple paths."""
        want = set(permutations(range(g.n), 2))
        if set(self.paths) != want:
            raise ValueError("routing must have exactly one path per ordered pair")
        for (u, v), p in self.paths.items():
            if p[0] != u or p[-1] != v or len(set(p)) != len(p):
                raise ValueError(f"bad path {p} for pair {(u, v)}")
            if not all(g.has_edge(a, b) for a, b in zip(p, p[1:])):
                raise ValueError(f"path {p} uses a non-edge")


@dataclass(frozen=True)
class ForwardingResult:
    xi: int
    pi: int
    xi_exact: bool
    pi_exact: bool
    xi_routing: Routing
    pi_routing: Routing


def simple_paths(g: Graph, s: int, t: int, limit: int | None = None) -> tuple[list[tuple[int, ...]], bool]:
    """All simple s-t paths, shortest first; the flag is False if ``limit`` truncated them."""
    out: list[tuple[int, ...]] = []
    stack = [s]
    on = 1 << s
    truncated = False

    def dfs(u: int) -> None:
        nonlocal on, truncated
        if truncated:
            return
        for w in sorted(g.neighbors[u]):
            if on >> w & 1:
                continue
            if w == t:
                out.append(tuple(stack) + (t,))
                if limit is not None and len(out) > limit:
                    truncated = True
                    return
                continue
            stack.append(w)
            on |= 1 << w
            dfs(w)
            on &= ~(1 << w)
            stack.pop()

    dfs(s)
    out.sort(key=lambda p: (len(p), p))
    if truncated:
        out = out[:limit]
    return out, not truncated


def shortest_paths(g: Graph, s: int, t: int, limit: int | None = None) -> list[tuple[int, ...]]:
    """All shortest s-t paths (at most ``limit``), found by walking down BFS layers."""
    dist = [-1] * g.n
    dist[t] = 0
    frontier = [t]
    while frontier and dist[s] < 0:
        nxt = []
        for u in frontier:
            for w in g.neighbors[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    out: list[tuple[int, ...]] = []

    def walk(path: list[int]) -> None:
        if limit is not None and len(out) >= limit:
            return
        u = path[-1]
        if u == t:
            out.append(tuple(path))
            return
        for w in sorted(g.neighbors[u]):
            if dist[w] == dist[u] - 1:
                path.append(w)
                walk(path)
                path.pop()

    walk([s])
    return out


def _separator_bounds(g: Graph) -> tuple[int, int]:
    """Lower bounds on xi and pi from vertex separators and edge cuts."""
    n = g.n
    full = (1 << n) - 1
    xi_lb = pi_lb = 0
    for x in range(1, full):
        size = x.bit_count()
        nb = neighborhood_mask(g, x) & ~x
        plus = (full & ~(x | nb)).bit_count()
        if plus:
            xi_lb = max(xi_lb, -(-2 * size * plus // nb.bit_count()))
        cut = sum((g.adj_masks[v] & ~x & full).bit_count() for v in range(n) if x >> v & 1)
        pi_lb = max(pi_lb, -(-2 * size * (n - size) // cut))
    return xi_lb, pi_lb


def _minimal_options(paths: list[tuple[int, ...]], mask_of) -> list[tuple[tuple[int, ...], int]]:
    """Keep one path per resource set, dropping sets that contain another.

    A path whose resources are a superset of another's can always be swapped
    for it without raising any load, so the optimum is unchanged.
    """
    best: dict[int, tuple[int, ...]] = {}
    for p in paths:
        m = mask_of(p)
        if m not in best:
            best[m] = p
    masks = sorted(best, key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in masks:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return [(best[m], m) for m in kept]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class _Search:
    """Decision search for one objective.

    Each unordered pair {u, v} is a group routing both (u, v) and (v, u);
    a path and its reverse use the same resources, so a group picks a
    multiset of two options. Groups are branched most-constrained first.
    """

    def __init__(
        self,
        groups: list[tuple[int, int]],
        options: list[list[tuple[tuple[int, ...], int]]],
        nres: int,
        budget: int,
        vertex: bool,
    ):
        self.vertex = vertex
        self.groups = groups
        self.options = options
        self.bits = [[_bits(m) for _, m in opts] for opts in options]
        self.nres = nres
        self.budget = budget
        self.exhausted = False
        self.min_cost = [2 * min(len(b) for b in bits) for bits in self.bits]

    def greedy(self) -> tuple[int, list[tuple[int, int]]]:
        load = [0] * self.nres
        choice = []
        order = sorted(range(len(self.groups)), key=lambda k: len(self.options[k]))
        picks: dict[int, tuple[int, int]] = {}
        for k in order:
            bits = self.bits[k]
            pair = []
            for _ in range(2):
                i = min(range(len(bits)), key=lambda i: (max((load[r] + 1 for r in bits[i]), default=0), len(bits[i])))
                for r in bits[i]:
                    load[r] += 1
                pair.append(i)
            picks[k] = (pair[0], pair[1])
        choice = [picks[k] for k in range(len(self.groups))]
        return max(load, default=0), choice

    def feasible(self, limit: int) -> list[tuple[int, int]] | None:
        self.exhausted = False
        load = [0] * self.nres
        choice: list[tuple[int, int] | None] = [None] * len(self.groups)
        remaining = set(range(len(self.groups)))
        state = {"sat": 0, "nodes": 0, "free": limit * self.nres, "need": sum(self.min_cost)}

        def bump(bits: list[int], delta: int) -> None:
            for r in bits:
                load[r] += delta
                if load[r] >= limit:
                    state["sat"] |= 1 << r
                else:
                    state["sat"] &= ~(1 << r)

        def dfs() -> bool:
            if not remaining:
                return True
            state["nodes"] += 1
            if state["nodes"] > self.budget:
                self.exhausted = True
                return False
            if state["need"] > state["free"]:
                return False
            sat = state["sat"]
            best = None
            best_opts: list[int] = []
            for k in remaining:
                opts = [i for i, (_, m) in enumerate(self.options[k]) if not m & sat]
                if not opts:
                    return False
                if best is None or len(opts) < len(best_opts):
                    best, best_opts = k, opts
                    if len(opts) == 1:
                        break
            k = best
            remaining.discard(k)
            state["need"] -= self.min_cost[k]
            bits = self.bits[k]
            combos = [(a, b) for x, a in enumerate(best_opts) for b in best_opts[x:]]
            combos.sort(key=lambda ab: len(bits[ab[0]]) + len(bits[ab[1]]))
            for a, b in combos:
                if a == b and any(load[r] + 2 > limit for r in bits[a]):
                    continue
                bump(bits[a], 1)
                if a != b and any(load[r] >= limit for r in bits[b]):
                    bump(bits[a], -1)
                    continue
                bump(bits[b], 1)
                cost = len(bits[a]) + len(bits[b])
                state["free"] -= cost
                choice[k] = (a, b)
                if dfs():
                    return True
                state["free"] += cost
                bump(bits[b], -1)
                bump(bits[a], -1)
                if self.exhausted:
                    break
            choice[k] = None
            state["need"] += self.min_cost[k]
            remaining.add(k)
            return False

        return list(choice) if dfs() else None

    def routing(self, n: int, choice: list[tuple[int, int]]) -> Routing:
        paths: dict[tuple[int, int], tuple[int, ...]] = {}
        for (u, v), opts, (a, b) in zip(self.groups, self.options, choice):
            paths[(u, v)] = opts[a][0]
            paths[(v, u)] = opts[b][0][::-1]
        return Routing(n, paths)


def _milp_optimum(search: _Search) -> list[tuple[int, int]] | None:
    """Optimal choice by mixed-integer programming, or None if HiGHS gives up.

    Variables count how many of a group's two paths use each option; one
    more variable is the maximum load being minimised.
    """
    cols = [(k, i) for k, opts in enumerate(search.options) for i in range(len(opts))]
    nv = len(cols) + 1
    load = lil_matrix((search.nres, nv))
    pick = lil_matrix((len(search.groups), nv))
    for col, (k, i) in enumerate(cols):
        pick[k, col] = 1
        for r in search.bits[k][i]:
            load[r, col] = 1
    load[:, nv - 1] = -1
    cost = np.zeros(nv)
    cost[-1] = 1
    res = milp(
        cost,
        constraints=[LinearConstraint(load.tocsr(), -np.inf, 0), LinearConstraint(pick.tocsr(), 2, 2)],
        integrality=np.ones(nv),
        bounds=Bounds(0, np.inf),
        options={"mip_rel_gap": 0.0},
    )
    if res.status != 0:
        return None
    counts = np.rint(res.x[:-1]).astype(int)
    chosen: list[list[int]] = [[] for _ in search.groups]
    for col, (k, i) in enumerate(cols):
        chosen[k].extend([i] * counts[col])
    return [(c[0], c[1]) for c in chosen]


def _minimise(search: _Search, lower: int, n: int) -> tuple[int, bool, Routing]:
    """Smallest feasible max load, whether it is proven, and a witness routing.

    Depth-first search handles the easy cases; when its node budget runs out
    the problem goes to an exact MILP solve instead.
    """
    upper, choice = search.greedy()
    for limit in range(lower, upper):
        found = search.feasible(limit)
        if found is not None:
            return limit, True, search.routing(n, found)
        if search.exhausted:
            break
    else:
        return upper, True, search.routing(n, choice)
    if search.budget == 0:
        return upper, False, search.routing(n, choice)
    found = _milp_optimum(search)
    if found is None:
        return upper, False, search.routing(n, choice)
    routing = search.routing(n, found)
    value = routing.max_vertex_load() if search.vertex else routing.max_edge_load()
    return value, True, routing


def forwarding_exact(
    g: Graph,
    cap: int = FORWARDING_CAP,
    path_cap: int = PATH_CAP,
    node_budget: int = NODE_BUDGET,
) -> ForwardingResult:
    """Vertex and edge forwarding indices with witness routings.

    Above ``cap`` vertices only shortest paths are offered to the greedy
    router and both values are upper bounds flagged as inexact.
    """
    if not is_connected(g):
        raise DomainError("forwarding indices are infinite for disconnected graphs")
    n = g.n
    exact_paths = n <= cap
    edge_index = {e: k for k, e in enumerate(g.sorted_edges())}

    def vertex_mask(p: tuple[int, ...]) -> int:
        m = 0
        for v in p[1:-1]:
            m |= 1 << v
        return m

    def edge_mask(p: tuple[int, ...]) -> int:
        m = 0
        for a, b in zip(p, p[1:]):
            m |= 1 << edge_index[(a, b) if a < b else (b, a)]
        return m

    groups = [(u, v) for u in range(n) for v in range(u + 1, n)]
    vertex_opts, edge_opts = [], []
    for u, v in groups:
        if n <= cap:
            paths, complete = simple_paths(g, u, v, path_cap)
            exact_paths = exact_paths and complete
        else:
            paths = shortest_paths(g, u, v, path_cap)
        vertex_opts.append(_minimal_options(paths, vertex_mask))
        edge_opts.append(_minimal_options(paths, edge_mask))

    if n <= cap:
        xi_lb, pi_lb = _separator_bounds(g)
    else:
        xi_lb = pi_lb = 0
    # every pair needs at least its cheapest option
    xi_lb = max(xi_lb, math.ceil(sum(2 * opts[0][1].bit_count() for opts in vertex_opts) / n))
    pi_lb = max(pi_lb, math.ceil(sum(2 * opts[0][1].bit_count() for opts in edge_opts) / max(g.m, 1)))

    budget = node_budget if exact_paths else 0
    xi, xi_ok, xi_r = _minimise(_Search(groups, vertex_opts, n, budget, vertex=True), xi_lb, n)
    pi, pi_ok, pi_r = _minimise(_Search(groups, edge_opts, g.m, budget, vertex=False), pi_lb, n)
    return ForwardingResult(
        xi=xi,
        pi=pi,
        xi_exact=exact_paths and xi_ok,
        pi_exact=exact_paths and pi_ok,
        xi_routing=xi_r,
        pi_routing=pi_r,
    )
