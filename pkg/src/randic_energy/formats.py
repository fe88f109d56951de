"""Edge-list and graph6 readers and writers."""

from __future__ import annotations

from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


class GraphParseError(ValueError):
    """Malformed graph text. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` followed by ``u v`` lines; ``#`` starts a comment line."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise GraphParseError(f"expected vertex count, got {line!r}", lineno)
            n = _parse_int(tokens[0], lineno)
            if n < 0:
                raise GraphParseError(f"negative vertex count {n}", lineno)
            continue
        if len(tokens) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = (_parse_int(t, lineno) for t in tokens)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"vertex out of range 0..{n - 1} in {line!r}", lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v))
    if n is None:
        raise GraphParseError("no vertex count found")
    return Graph.from_edges(n, edges)


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"not an integer: {token!r}", lineno) from None


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def _size_prefix(n: int) -> bytes:
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([126] + [63 + ((n >> s) & 63) for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [63 + ((n >> s) & 63) for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"n={n} too large for graph6")


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no newline)."""
    n = g.n
    nbits = n * (n - 1) // 2
    bits = bytearray(nbits + (-nbits) % 6)
    for u, v in g.edges:
        # column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
        bits[v * (v - 1) // 2 + u] = 1
    body = bytearray()
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k:k + 6]:
            chunk = (chunk << 1) | b
        body.append(63 + chunk)
    return (_size_prefix(n) + bytes(body)).decode("ascii")


def parse_graph6(s: str) -> Graph:
    """Decode one graph6 string; an optional ``>>graph6<<`` header is dropped."""
    s = s.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise GraphParseError("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    for pos, c in enumerate(data):
        if not 63 <= c <= 126:
            raise GraphParseError(f"invalid graph6 character {chr(c)!r} at offset {pos}")
    vals = [c - 63 for c in data]
    if vals[0] < 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        rest = vals[4:]
        if n <= 62:
            raise GraphParseError("non-canonical graph6 size prefix")
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        rest = vals[8:]
        if n <= 258047:
            raise GraphParseError("non-canonical graph6 size prefix")
    else:
        raise GraphParseError("malformed graph6 size prefix")
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(rest) != nbytes:
        raise GraphParseError(f"expected {nbytes} data bytes for n={n}, got {len(rest)}")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if (rest[k // 6] >> (5 - k % 6)) & 1:
                edges.append((u, v))
            k += 1
    if nbytes and rest[-1] & ((1 << (nbytes * 6 - nbits)) - 1):
        raise GraphParseError("nonzero padding bits")
    return Graph.from_edges(n, edges)


def parse_graph6_lines(text: str) -> list[Graph]:
    """One graph per non-blank line; errors carry the line number."""
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line))
        except GraphParseError as exc:
            raise GraphParseError(str(exc), lineno) from None
    return graphs
