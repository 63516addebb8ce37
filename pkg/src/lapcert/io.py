"""graph6 and plain edge-list reading and writing.

graph6 stores the upper triangle of the adjacency matrix column by column
(column j = 1..n-1, rows i = 0..j-1), six bits per printable byte offset by
63. Only the short (n <= 62) and four-byte (n <= 258047) size forms are
supported.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import (
    GraphFormatError,
    MalformedCharacterError,
    MultiEdgeError,
    PaddingError,
    TruncatedInputError,
    UnsupportedSizeError,
)
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"
MAX_GRAPH6_N = 258047


def _check_byte(ch: str, offset: int) -> int:
    b = ord(ch)
    if not 63 <= b <= 126:
        raise MalformedCharacterError(f"byte {b} outside 63..126", offset=offset)
    return b - 63


def parse_graph6(text: str, *, strict: bool = False) -> Graph:
    """Decode one graph6 line.

    Trailing whitespace and an optional ``>>graph6<<`` header are accepted.
    In strict mode nonzero padding bits in the last byte are an error.
    """
    s = text.rstrip("\r\n \t")
    base = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not s:
        raise TruncatedInputError("empty graph6 string", offset=base)

    first = _check_byte(s[0], base)
    if first < 63:
        n, pos = first, 1
    else:
        if len(s) >= 2 and s[1] == "~":
            raise UnsupportedSizeError(f"eight-byte size form (n > {MAX_GRAPH6_N}) is not supported")
        if len(s) < 4:
            raise TruncatedInputError("size field truncated", offset=base + len(s))
        n = 0
        for k in range(1, 4):
            n = (n << 6) | _check_byte(s[k], base + k)
        if n < 63:
            raise GraphFormatError(f"long size form used for n={n}", offset=base)
        pos = 4

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = s[pos:]
    if len(payload) < nbytes:
        raise TruncatedInputError(
            f"expected {nbytes} payload bytes for n={n}, got {len(payload)}", offset=base + len(s)
        )
    if len(payload) > nbytes:
        raise GraphFormatError(
            f"expected {nbytes} payload bytes for n={n}, got {len(payload)}", offset=base + pos + nbytes
        )

    values = [_check_byte(ch, base + pos + k) for k, ch in enumerate(payload)]
    if nbytes and strict:
        pad = nbytes * 6 - nbits
        if values[-1] & ((1 << pad) - 1):
            raise PaddingError("nonzero padding bits", offset=base + pos + nbytes - 1)

    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if values[bit // 6] >> (5 - bit % 6) & 1:
                edges.append((i, j))
            bit += 1
    return Graph.from_edges(n, edges)


def write_graph6(g: Graph, *, header: bool = False) -> str:
    n = g.n
    if n > MAX_GRAPH6_N:
        raise UnsupportedSizeError(f"graph6 writer supports n <= {MAX_GRAPH6_N}, got {n}")
    if n < 63:
        out = [chr(n + 63)]
    else:
        out = ["~"] + [chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0)]

    acc = nacc = 0
    for j in range(1, n):
        col = g.adj_masks[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return (GRAPH6_HEADER if header else "") + "".join(out)


def read_graph6_lines(lines: Iterable[str], *, strict: bool = False) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line."""
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            yield lineno, parse_graph6(line, strict=strict)
        except GraphFormatError as exc:
            raise type(exc)(f"{exc}", line=lineno) from exc


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v``; ``#`` lines are comments."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise GraphFormatError("missing 'n m' header")

    def ints(lineno: int, parts: list[str]) -> tuple[int, int]:
        if len(parts) != 2:
            raise GraphFormatError(f"expected two integers, got {' '.join(parts)!r}", line=lineno)
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer token in {' '.join(parts)!r}", line=lineno) from None

    head_line, head = rows[0]
    n, m = ints(head_line, head)
    if n < 0 or m < 0:
        raise GraphFormatError("negative n or m", line=head_line)
    body = rows[1:]
    if len(body) != m:
        raise TruncatedInputError(f"header declares {m} edges, found {len(body)}", line=head_line)

    edges = []
    for lineno, parts in body:
        u, v = ints(lineno, parts)
        edges.append((lineno, u, v))
    seen = set()
    for lineno, u, v in edges:
        try:
            Graph.from_edges(n, [(u, v)])
        except GraphFormatError as exc:
            raise type(exc)(str(exc), line=lineno) from None
        key = (min(u, v), max(u, v))
        if key in seen:
            raise MultiEdgeError(f"duplicate edge {key}", line=lineno)
        seen.add(key)
    return Graph.from_edges(n, [(u, v) for _, u, v in edges])


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"
