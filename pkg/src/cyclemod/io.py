"""Graph interchange formats: graph6 and a plain edge-list text format.

The graph6 codec is bit-exact per the published format specification:
every byte is 63 + a 6-bit value, n is encoded in 1, 4 or 8 bytes, and the
adjacency bits run over the upper triangle in column-major order.
"""

from __future__ import annotations

from .errors import FormatError
from .graph import Graph, make_graph

GRAPH6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return chr(126) + "".join(
            chr(63 + ((n >> shift) & 63)) for shift in (12, 6, 0)
        )
    if n <= 68719476735:
        return chr(126) + chr(126) + "".join(
            chr(63 + ((n >> shift) & 63)) for shift in (30, 24, 18, 12, 6, 0)
        )
    raise FormatError(f"graph6 cannot encode n={n}")


def emit_graph6(g: Graph) -> str:
    """Encode a graph as a one-line graph6 string."""
    bits: list[int] = []
    for v in range(1, g.n):
        row = g.adj_bits[v]
        for u in range(v):
            bits.append((row >> u) & 1)
    while len(bits) % 6:
        bits.append(0)
    chunks = [
        chr(63 + (bits[i] << 5 | bits[i + 1] << 4 | bits[i + 2] << 3
                  | bits[i + 3] << 2 | bits[i + 4] << 1 | bits[i + 5]))
        for i in range(0, len(bits), 6)
    ]
    return _encode_n(g.n) + "".join(chunks)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; raises ``FormatError`` with a byte offset."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise FormatError("empty graph6 input", 0)
    values: list[int] = []
    for i, ch in enumerate(s):
        code = ord(ch) - 63
        if not (0 <= code <= 63):
            raise FormatError(f"byte {ch!r} outside graph6 range", i)
        values.append(code)

    pos = 0
    if values[0] <= 62:
        n = values[0]
        pos = 1
    elif len(values) >= 2 and values[1] <= 62:
        if len(values) < 4:
            raise FormatError("truncated 4-byte order field", len(s))
        n = values[1] << 12 | values[2] << 6 | values[3]
        pos = 4
    else:
        if len(values) < 8:
            raise FormatError("truncated 8-byte order field", len(s))
        n = 0
        for v in values[2:8]:
            n = n << 6 | v
        pos = 8

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(values) - pos < nbytes:
        raise FormatError(
            f"bit body truncated: need {nbytes} bytes, have {len(values) - pos}",
            len(s),
        )
    if len(values) - pos > nbytes:
        raise FormatError("trailing bytes after bit body", pos + nbytes)

    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            byte = values[pos + idx // 6]
            if (byte >> (5 - idx % 6)) & 1:
                edges.append((u, v))
            idx += 1
    # padding bits must be zero per the format
    while idx < 6 * nbytes:
        if (values[pos + idx // 6] >> (5 - idx % 6)) & 1:
            raise FormatError("nonzero padding bit", pos + idx // 6)
        idx += 1
    return make_graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse "n" followed by whitespace-separated "u v" pairs.

    '#' starts a comment running to end of line. Equals ``make_graph`` on
    the parsed data, so range and loop errors propagate unchanged.
    """
    tokens: list[tuple[str, int]] = []
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0]
        col = 0
        for tok in body.split():
            col = body.index(tok, col)
            tokens.append((tok, offset + col))
            col += len(tok)
        offset += len(line)
    if not tokens:
        raise FormatError("no vertex count found", 0)

    def as_int(tok: str, off: int) -> int:
        try:
            return int(tok)
        except ValueError:
            raise FormatError(f"non-integer token {tok!r}", off) from None

    n = as_int(*tokens[0])
    rest = tokens[1:]
    if len(rest) % 2:
        raise FormatError("dangling endpoint at end of input", rest[-1][1])
    edges = [
        (as_int(*rest[i]), as_int(*rest[i + 1])) for i in range(0, len(rest), 2)
    ]
    return make_graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    """Inverse of ``parse_edge_list`` with one edge per line."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
