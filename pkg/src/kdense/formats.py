"""graph6 and plain edge-list serialization."""

from __future__ import annotations

import logging

from .graph import Graph, GraphError, from_edge_list

log = logging.getLogger(__name__)

G6_HEADER = ">>graph6<<"
_G6_MAX_N = 258047


def _encode_size(n: int) -> str:
    if n < 0 or n > _G6_MAX_N:
        raise GraphError(f"graph6 cannot encode n={n}")
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    """McKay graph6: size bytes, then the upper triangle column by column."""
    out = [_encode_size(g.n)]
    acc = nbits = 0
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(G6_HEADER):
        s = s[len(G6_HEADER):]
    if not s:
        raise GraphError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in data):
        raise GraphError("graph6 characters must lie in [63, 126]")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise GraphError("unsupported or truncated graph6 size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise GraphError("graph6 padding bits must be zero")
    return Graph._trusted(n, adj)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> tuple[Graph, int]:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` starts a comment.

    Returns the graph and the number of duplicate edge lines collapsed.
    """
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphError("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(header) != 2:
        raise GraphError("edge list header must be 'n m'")
    n, m = header
    if m != len(pairs):
        raise GraphError(f"header announces {m} edges but {len(pairs)} lines follow")
    seen: set[tuple[int, int]] = set()
    duplicates = 0
    for u, v in pairs:
        key = (min(u, v), max(u, v))
        if key in seen:
            duplicates += 1
        seen.add(key)
    if duplicates:
        log.warning("collapsed %d duplicate edge line(s)", duplicates)
    return from_edge_list(n, pairs), duplicates


def parse_graph(text: str) -> Graph:
    """Auto-detect graph6 (first byte in '@'..'~' or a '>>' header) or edge list."""
    s = text.strip()
    if not s:
        raise GraphError("empty input")
    first = s[0]
    if s.startswith(G6_HEADER) or ("@" <= first <= "~" and len(s.split()) == 1):
        return from_graph6(s)
    return parse_edge_list(s)[0]
