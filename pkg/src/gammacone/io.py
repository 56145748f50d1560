"""Edge-list and graph6 readers and writers.

Edge-list format: optional '#' comment lines, a header line "n <count>",
then one "u v" pair per line with 0 <= u, v < count.  graph6 is the
standard one-line ASCII interchange encoding, restricted here to the
single-byte size field (n <= 62): byte 0 is n+63, the remaining bytes
pack the upper-triangle adjacency bits x(0,1), x(0,2), x(1,2), x(0,3),
... six per byte, most significant bit first, each byte offset by 63,
with zero padding bits.
"""

from __future__ import annotations

from .errors import EmptyGraphError, GraphFormatError
from .graphs import Graph


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format; errors carry 1-based line numbers."""
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise GraphFormatError(
                    f"line {lineno}: expected header 'n <count>', got {line!r}"
                )
            try:
                n = int(tokens[1])
            except ValueError:
                raise GraphFormatError(
                    f"line {lineno}: vertex count {tokens[1]!r} is not an integer"
                ) from None
            if n <= 0:
                raise EmptyGraphError(f"line {lineno}: vertex count must be positive")
            continue
        if len(tokens) != 2:
            raise GraphFormatError(
                f"line {lineno}: expected 'u v', got {line!r}"
            )
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(
                f"line {lineno}: edge endpoints must be integers, got {line!r}"
            ) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(
                f"line {lineno}: vertex id out of range 0..{n - 1} in {line!r}"
            )
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop edge at vertex {u}")
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing 'n <count>' header line")
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


_G6_HEADER = ">>graph6<<"


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (n <= 62), bit-exactly."""
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    data = [ord(ch) for ch in s]
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphFormatError(
                f"graph6 byte {pos}: value {b} outside the printable range 63..126"
            )
    if data[0] == 126:
        raise GraphFormatError("graph6 long-form size fields (n > 62) are not supported")
    n = data[0] - 63
    if n == 0:
        raise EmptyGraphError("graph6 string encodes a graph with no vertices")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[1:]
    if len(body) < need:
        raise GraphFormatError(
            f"graph6 bit stream truncated: need {need} data bytes for n={n}, got {len(body)}"
        )
    if len(body) > need:
        raise GraphFormatError(
            f"graph6 string has {len(body) - need} trailing bytes beyond the bit stream"
        )
    edges = []
    t = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[t // 6] - 63
            bit = byte >> (5 - t % 6) & 1
            if bit:
                edges.append((i, j))
            t += 1
    # remaining bits of the last byte are padding and must be zero
    while t < 6 * need:
        byte = body[t // 6] - 63
        if byte >> (5 - t % 6) & 1:
            raise GraphFormatError(f"graph6 padding bit {t} is set")
        t += 1
    return Graph.from_edges(n, edges)


def format_graph6(g: Graph) -> str:
    """Encode to graph6; inverse of parse_graph6 for n <= 62."""
    if g.n > 62:
        raise ValueError("graph6 writer supports at most 62 vertices")
    nbits = g.n * (g.n - 1) // 2
    need = (nbits + 5) // 6
    out = [g.n + 63]
    acc = 0
    filled = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (1 if g.has_edge(i, j) else 0)
            filled += 1
            if filled == 6:
                out.append(acc + 63)
                acc = 0
                filled = 0
    if filled:
        out.append((acc << (6 - filled)) + 63)
    assert len(out) == 1 + need
    return bytes(out).decode("ascii")
