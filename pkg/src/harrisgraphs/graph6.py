"""graph6 encoding and decoding.

Implements the standard one-line graph6 format: a size header in >=63
offset encoding followed by the upper-triangle adjacency bits packed
big-endian in 6-bit groups, column-major (bit for (i,j), i < j, ordered by
j then i). Only the short header (n <= 62) is emitted; that covers every
graph this toolkit produces.
"""

from __future__ import annotations

from .core import Graph, build_graph

_OPTIONAL_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def parse_graph6(text: str) -> Graph:
    """Parse a single graph6 line into a Graph."""
    s = text.strip()
    if s.startswith(_OPTIONAL_HEADER):
        s = s[len(_OPTIONAL_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126", i)
    if ord(s[0]) == 126:
        raise Graph6Error("long size headers (n > 62) are not supported", 0)
    n = ord(s[0]) - 63
    if n == 0:
        raise Graph6Error("the empty graph (n=0) is outside the supported domain", 0)
    body = s[1:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"expected {expected} edge bytes for n={n}, got {len(body)}",
            1 + min(len(body), expected),
        )
    bits = 0
    for ch in body:
        bits = bits << 6 | (ord(ch) - 63)
    pad = expected * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", len(s) - 1)
    bits >>= pad
    edges = []
    pos = nbits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if bits >> pos & 1:
                edges.append((i, j))
    return build_graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode a Graph as a graph6 line; parse(emit(g)) is vertex-for-vertex g."""
    if g.n > 62:
        raise Graph6Error(f"n={g.n} needs a long size header, which is not supported")
    bits = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            bits = bits << 1 | (g.adj[i] >> j & 1)
            nbits += 1
    pad = (-nbits) % 6
    bits <<= pad
    nbits += pad
    out = [chr(g.n + 63)]
    for shift in range(nbits - 6, -1, -6):
        out.append(chr((bits >> shift & 0x3F) + 63))
    return "".join(out)


def read_graph6_lines(lines) -> list[Graph]:
    """Parse an iterable of graph6 lines, skipping blanks."""
    out = []
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            out.append(parse_graph6(line))
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from exc
    return out
