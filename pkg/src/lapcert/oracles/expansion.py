"""Expansion factor gamma and cut ratio beta by exhaustive subset enumeration.

Both tables are built by doubling: the row for masks containing vertex i is
derived from the row for masks below ``1 << i``. Memory is ``O(2**n)`` int64.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import DomainError
from ..graph import Graph

SUBSET_CAP = 22


def _check(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise DomainError(f"subset enumeration is capped at n <= {cap}, got n = {g.n}")


def _neighbourhood_table(g: Graph) -> np.ndarray:
    nb = np.zeros(1, dtype=np.int64)
    for i in range(g.n):
        nb = np.concatenate([nb, nb | g.adj_masks[i]])
    return nb


def _cut_table(g: Graph) -> np.ndarray:
    """``cut[U]`` = number of edges with exactly one end in U."""
    masks = np.zeros(1, dtype=np.int64)
    cut = np.zeros(1, dtype=np.int64)
    for i in range(g.n):
        inside = np.bitwise_count(masks & g.adj_masks[i]).astype(np.int64)
        cut = np.concatenate([cut, cut + g.degrees[i] - 2 * inside])
        masks = np.concatenate([masks, masks | (1 << i)])
    return cut


def gamma_exact(g: Graph, cap: int = SUBSET_CAP) -> float:
    """min |N(X)| / (|X| |X+|) over X with X+ nonempty; ``inf`` when no such X exists."""
    _check(g, cap)
    n = g.n
    if n < 2:
        return math.inf
    full = (1 << n) - 1
    masks = np.arange(1 << n, dtype=np.int64)
    nb = _neighbourhood_table(g)
    boundary = np.bitwise_count(nb & ~masks & full).astype(np.int64)
    plus = np.bitwise_count(full & ~(masks | nb)).astype(np.int64)
    size = np.bitwise_count(masks).astype(np.int64)
    ok = (size >= 1) & (plus >= 1)
    if not ok.any():
        return math.inf
    return float(np.min(boundary[ok] / (size[ok] * plus[ok])))


def beta_exact(g: Graph, cap: int = SUBSET_CAP) -> float:
    """min e(U, V-U) / (|U| (n - |U|)) over nonempty proper U."""
    _check(g, cap)
    n = g.n
    if n < 2:
        raise DomainError("beta needs at least two vertices")
    cut = _cut_table(g)
    size = np.bitwise_count(np.arange(1 << n, dtype=np.int64)).astype(np.int64)
    ok = (size >= 1) & (size <= n - 1)
    return float(np.min(cut[ok] / (size[ok] * (n - size[ok]))))
