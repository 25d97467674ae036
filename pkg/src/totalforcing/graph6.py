"""graph6 reader and writer (one graph per line, upper-triangle bit order)."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .errors import Graph6Error
from .graph import Graph

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> list[int]:
    # values are pre-offset; 63 encodes the '~' marker byte
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    if n <= 68719476735:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise ValueError(f"graph order {n} too large for graph6")


def write_graph6(g: Graph) -> str:
    """Encode ``g`` without the optional ``>>graph6<<`` header or trailing newline."""
    out = _encode_n(g.n)
    acc = 0
    nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc)
                acc = nbits = 0
    if nbits:
        out.append(acc << (6 - nbits))
    return "".join(chr(b + 63) for b in out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line. Raises :class:`Graph6Error` naming the offending byte offset."""
    line = text.rstrip("\r\n")
    start = len(_HEADER) if line.startswith(_HEADER) else 0
    data = line[start:]
    if not data:
        raise Graph6Error("empty graph6 string", start)
    vals = []
    for i, ch in enumerate(data):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6Error(f"byte {ch!r} outside graph6 range", start + i)
        vals.append(code - 63)

    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise Graph6Error("truncated 8-byte size header", start + len(vals))
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated 4-byte size header", start + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) < need:
        raise Graph6Error(f"truncated edge bit field: expected {need} bytes, found {len(body)}", start + len(vals))
    if len(body) > need:
        raise Graph6Error("trailing data after edge bit field", start + pos + need)
    if need and nbits % 6:
        pad = 6 - nbits % 6
        if body[-1] & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", start + pos + need - 1)

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph.from_masks(adj)


def iter_graph6(lines: Iterable[str]) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Yield ``(line_number, graph_or_error)`` for each non-blank line; errors do not stop iteration."""
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            yield lineno, exc


def read_graph6_file(path: str | Path) -> list[tuple[int, Graph | Graph6Error]]:
    with open(path, encoding="ascii", errors="replace") as fh:
        return list(iter_graph6(fh))
