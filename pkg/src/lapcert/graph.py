"""Immutable simple graphs, vertex subsets and the subset statistics.

Vertices are always the integers ``0..n-1``. Adjacency is stored twice: as
frozensets (for iteration) and as integer bitmasks (for the exhaustive
oracles, which work on masks throughout).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .errors import DomainError, LoopError, MultiEdgeError, VertexRangeError

Edge = tuple[int, int]


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``{0, ..., n-1}`` stored as a bitmask."""

    n: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.n:
            raise VertexRangeError(f"mask {self.mask:#x} has members outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> VertexSet:
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise VertexRangeError(f"vertex {v} outside 0..{n - 1}")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls(n, (1 << n) - 1)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.mask & other.mask)

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.n, self.mask | other.mask)

    def complement(self) -> VertexSet:
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def __repr__(self) -> str:
        return f"VertexSet({sorted(self)})"


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Construct with :meth:`from_edges`; the constructor trusts its input.
    """

    n: int
    edges: frozenset[Edge]
    neighbors: tuple[frozenset[int], ...] = field(init=False, repr=False)
    adj_masks: tuple[int, ...] = field(init=False, repr=False)
    degrees: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "neighbors", tuple(frozenset(s) for s in nbrs))
        object.__setattr__(
            self, "adj_masks", tuple(sum(1 << w for w in s) for s in nbrs)
        )
        object.__setattr__(self, "degrees", tuple(len(s) for s in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], *, strict: bool = True) -> Graph:
        """Build a graph, rejecting loops, out-of-range ends and repeated pairs.

        With ``strict=False`` repeated pairs are merged silently; loops and
        out-of-range vertices are always errors.
        """
        if n < 0:
            raise DomainError("vertex count must be nonnegative")
        seen: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen and strict:
                raise MultiEdgeError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def volume(self) -> int:
        return 2 * len(self.edges)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_masks[u] >> v & 1)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_regular(self) -> bool:
        return self.n == 0 or min(self.degrees) == max(self.degrees)

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise DomainError("perm must be a permutation of 0..n-1")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def complement(self) -> Graph:
        return Graph.from_edges(
            self.n,
            ((u, v) for u in range(self.n) for v in range(u + 1, self.n) if not self.has_edge(u, v)),
        )

    def disjoint_union(self, other: Graph) -> Graph:
        k = self.n
        return Graph.from_edges(
            k + other.n, list(self.edges) + [(u + k, v + k) for u, v in other.edges]
        )

    def vertex_set(self, members: Iterable[int] | VertexSet) -> VertexSet:
        if isinstance(members, VertexSet):
            if members.n != self.n:
                raise DomainError(f"vertex set over {members.n} vertices used with graph of order {self.n}")
            return members
        return VertexSet.of(self.n, members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class SubsetStats(NamedTuple):
    vol_x: int
    vol_y: int
    e_xy: int
    vol_xy: int
    size_xy: int


def subset_stats(g: Graph, X: Iterable[int] | VertexSet, Y: Iterable[int] | VertexSet) -> SubsetStats:
    """Volumes of X and Y and the ordered-pair edge count e(X, Y).

    e(X, Y) counts pairs (x, y) with x in X, y in Y and {x, y} an edge, so an
    edge inside X & Y is counted once in each direction.
    """
    xs, ys = g.vertex_set(X), g.vertex_set(Y)
    both = xs & ys
    e_xy = sum((g.adj_masks[x] & ys.mask).bit_count() for x in xs)
    return SubsetStats(
        vol_x=sum(g.degrees[v] for v in xs),
        vol_y=sum(g.degrees[v] for v in ys),
        e_xy=e_xy,
        vol_xy=sum(g.degrees[v] for v in both),
        size_xy=len(both),
    )


def edges_within(g: Graph, U: Iterable[int] | VertexSet) -> int:
    """Number of unordered edges with both ends in U."""
    us = g.vertex_set(U)
    return sum((g.adj_masks[u] & us.mask).bit_count() for u in us) // 2


def neighborhood_mask(g: Graph, mask: int) -> int:
    out = 0
    m = mask
    while m:
        low = m & -m
        out |= g.adj_masks[low.bit_length() - 1]
        m ^= low
    return out


def boundary_sets(g: Graph, X: Iterable[int] | VertexSet) -> tuple[VertexSet, VertexSet]:
    """Return ``(N(X), X_plus)``: outside neighbours of X and everything else."""
    xs = g.vertex_set(X)
    if not xs.mask or xs.mask == (1 << g.n) - 1:
        raise DomainError("X must be a nonempty proper subset of V")
    full = (1 << g.n) - 1
    nx_mask = neighborhood_mask(g, xs.mask) & ~xs.mask
    return VertexSet(g.n, nx_mask), VertexSet(g.n, full & ~(xs.mask | nx_mask))


def connected_components(g: Graph) -> list[VertexSet]:
    """Components ordered by their smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        mask = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            mask |= 1 << u
            for w in g.neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(VertexSet(g.n, mask))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1
