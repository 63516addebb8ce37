"""Named graph families, ``name:params`` parsing and small-graph enumeration."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, FamilyParameterError
from .graph import Graph, is_connected

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "complete_multipartite",
    "hypercube",
    "petersen",
    "paley",
    "gnp",
    "random_regular",
)


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its positional parameters.

    ``complete_multipartite`` takes the part sizes; ``gnp`` takes
    ``(n, p, seed)`` and ``random_regular`` takes ``(n, d, seed)``.
    """

    family: str
    params: tuple = ()

    def __str__(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}:{','.join(str(p) for p in self.params)}"


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % k for k in range(2, int(q**0.5) + 1))


def _int_param(spec: FamilySpec, k: int, lo: int) -> int:
    try:
        v = spec.params[k]
    except IndexError:
        raise FamilyParameterError(f"{spec.family} needs at least {k + 1} parameter(s)") from None
    if isinstance(v, bool) or int(v) != v or v < lo:
        raise FamilyParameterError(f"{spec.family}: parameter {k} must be an integer >= {lo}, got {v!r}")
    return int(v)


def _pairing_regular(n: int, d: int, rng: np.random.Generator, tries: int = 200) -> list[tuple[int, int]]:
    """Uniform-ish simple d-regular graph by repeated stub pairing.

    Stubs are shuffled and paired; pairs that would make a loop or a repeated
    edge go back into the pool for another shuffle. If the pool can no longer
    be paired at all, start over.
    """
    for _ in range(tries):
        edges: set[tuple[int, int]] = set()
        stubs = np.repeat(np.arange(n), d).tolist()
        while stubs:
            rng.shuffle(stubs)
            left = []
            for a, b in zip(stubs[::2], stubs[1::2]):
                e = (a, b) if a < b else (b, a)
                if a == b or e in edges:
                    left += [a, b]
                else:
                    edges.add(e)
            if len(left) == len(stubs) and not _pairable(left, edges):
                break
            stubs = left
        if not stubs:
            return sorted(edges)
    raise FamilyParameterError(f"failed to produce a simple {d}-regular graph on {n} vertices")


def _pairable(stubs: list[int], edges: set[tuple[int, int]]) -> bool:
    verts = sorted(set(stubs))
    return any((a, b) not in edges for i, a in enumerate(verts) for b in verts[i + 1 :])


def generate_family(spec: FamilySpec) -> Graph:
    f = spec.family
    if f == "path":
        n = _int_param(spec, 0, 1)
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if f == "cycle":
        n = _int_param(spec, 0, 3)
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if f == "complete":
        n = _int_param(spec, 0, 1)
        return Graph.from_edges(n, itertools.combinations(range(n), 2))
    if f == "complete_multipartite":
        if not spec.params:
            raise FamilyParameterError("complete_multipartite needs at least one part size")
        sizes = [_int_param(spec, k, 1) for k in range(len(spec.params))]
        part = [k for k, s in enumerate(sizes) for _ in range(s)]
        n = len(part)
        return Graph.from_edges(
            n, ((u, v) for u, v in itertools.combinations(range(n), 2) if part[u] != part[v])
        )
    if f == "hypercube":
        k = _int_param(spec, 0, 0)
        n = 1 << k
        return Graph.from_edges(n, ((v, v ^ (1 << b)) for v in range(n) for b in range(k) if v < v ^ (1 << b)))
    if f == "petersen":
        if spec.params:
            raise FamilyParameterError("petersen takes no parameters")
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return Graph.from_edges(10, outer + spokes + inner)
    if f == "paley":
        q = _int_param(spec, 0, 5)
        if not _is_prime(q) or q % 4 != 1:
            raise FamilyParameterError(f"paley needs a prime q = 1 mod 4, got {q}")
        residues = {(x * x) % q for x in range(1, q)}
        return Graph.from_edges(
            q, ((u, v) for u, v in itertools.combinations(range(q), 2) if (v - u) % q in residues)
        )
    if f == "gnp":
        if len(spec.params) != 3:
            raise FamilyParameterError("gnp needs (n, p, seed)")
        n = _int_param(spec, 0, 0)
        p = float(spec.params[1])
        seed = _int_param(spec, 2, 0)
        if not 0.0 <= p <= 1.0:
            raise FamilyParameterError(f"gnp: p must lie in [0, 1], got {p}")
        rng = np.random.default_rng(seed)
        pairs = list(itertools.combinations(range(n), 2))
        keep = rng.random(len(pairs)) < p
        return Graph.from_edges(n, (e for e, k in zip(pairs, keep) if k))
    if f == "random_regular":
        if len(spec.params) != 3:
            raise FamilyParameterError("random_regular needs (n, d, seed)")
        n = _int_param(spec, 0, 1)
        d = _int_param(spec, 1, 0)
        seed = _int_param(spec, 2, 0)
        if d >= n or (n * d) % 2:
            raise FamilyParameterError(f"no simple {d}-regular graph on {n} vertices")
        rng = np.random.default_rng(seed)
        # sparser side is faster to pair
        if 2 * d > n - 1:
            return Graph.from_edges(n, _pairing_regular(n, n - 1 - d, rng)).complement()
        return Graph.from_edges(n, _pairing_regular(n, d, rng))
    raise FamilyParameterError(f"unknown family {f!r}; expected one of {', '.join(FAMILIES)}")


def _parse_scalar(tok: str) -> int | float:
    try:
        return int(tok)
    except ValueError:
        try:
            return float(tok)
        except ValueError:
            raise FamilyParameterError(f"bad family parameter {tok!r}") from None


def parse_family(text: str) -> FamilySpec:
    """Parse ``name`` or ``name:a,b,c`` into a :class:`FamilySpec`."""
    name, _, rest = text.strip().partition(":")
    if name not in FAMILIES:
        raise FamilyParameterError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")
    params = tuple(_parse_scalar(t) for t in rest.split(",")) if rest else ()
    return FamilySpec(name, params)


def expand_family_range(text: str) -> list[FamilySpec]:
    """Expand ``a..b`` integer ranges in any parameter, e.g. ``path:4..12``.

    Several ranged parameters expand as a Cartesian product in parameter order.
    """
    name, _, rest = text.strip().partition(":")
    if not rest:
        return [parse_family(name)]
    choices = []
    for tok in rest.split(","):
        if ".." in tok:
            lo, hi = tok.split("..", 1)
            choices.append([str(v) for v in range(int(lo), int(hi) + 1)])
        else:
            choices.append([tok])
    return [parse_family(f"{name}:{','.join(combo)}") for combo in itertools.product(*choices)]


def _canonical_masks(n: int) -> np.ndarray:
    """Canonical edge mask (minimum over all relabelings) of every labeled graph."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    index = {p: k for k, p in enumerate(pairs)}
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    bits = [(masks >> k) & 1 for k in range(len(pairs))]
    best = masks.copy()
    for perm in itertools.permutations(range(n)):
        image = np.zeros_like(masks)
        for k, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            image |= bits[k] << index[(min(a, b), max(a, b))]
        np.minimum(best, image, out=best)
    return best


def enumerate_graphs(n: int, *, connected: bool = True) -> list[Graph]:
    """Every graph on ``n <= 6`` vertices up to isomorphism, in canonical-mask order."""
    if not 0 <= n <= 6:
        raise DomainError("exhaustive enumeration is limited to n <= 6")
    if n == 0:
        return [] if connected else [Graph.from_edges(0, [])]
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    out = []
    for mask in np.unique(_canonical_masks(n)).tolist():
        g = Graph.from_edges(n, (p for k, p in enumerate(pairs) if mask >> k & 1))
        if not connected or is_connected(g):
            out.append(g)
    return out
