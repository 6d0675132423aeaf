"""Exact clique search and edge/vertex connectivity for desk-scale graphs."""

from __future__ import annotations

from collections import deque

from .graph import Graph, is_connected, iter_bits


def _color_bound(adj, cand: int) -> list[tuple[int, int]]:
    # Greedy colouring of cand; returns (vertex, colour) in ascending colour.
    out = []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~adj[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            out.append((v, color))
    return out


def max_clique(g: Graph) -> list[int]:
    """A maximum clique, by branch and bound with greedy colouring bounds."""
    adj = g.adj
    best: list[int] = []

    def expand(current: list[int], cand: int) -> None:
        nonlocal best
        order = _color_bound(adj, cand)
        for v, color in reversed(order):
            if len(current) + color <= len(best):
                return
            current.append(v)
            nxt = cand & adj[v]
            if nxt:
                expand(current, nxt)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            cand &= ~(1 << v)

    if g.n:
        expand([], (1 << g.n) - 1)
    return sorted(best)


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All maximal cliques (Bron-Kerbosch with pivoting)."""
    adj = g.adj
    out = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(frozenset(iter_bits(r)))
            return
        pivot = max(iter_bits(p | x), key=lambda u: (adj[u] & p).bit_count())
        for v in iter_bits(p & ~adj[pivot]):
            bit = 1 << v
            bk(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    if g.n:
        bk(0, (1 << g.n) - 1, 0)
    return out


def _max_flow(cap: dict[int, dict[int, int]], s: int, t: int, limit: int | None = None) -> int:
    # Unit-ish capacities, BFS augmenting paths; stops early at ``limit``.
    flow = 0
    while limit is None or flow < limit:
        prev = {s: s}
        queue = deque([s])
        while queue and t not in prev:
            x = queue.popleft()
            for y, c in cap[x].items():
                if c > 0 and y not in prev:
                    prev[y] = x
                    queue.append(y)
        if t not in prev:
            break
        y = t
        while y != s:
            x = prev[y]
            cap[x][y] -= 1
            cap[y][x] = cap[y].get(x, 0) + 1
            y = x
        flow += 1
    return flow


def local_edge_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    cap = {v: {u: 1 for u in iter_bits(g.adj[v])} for v in range(g.n)}
    return _max_flow(cap, s, t, limit)


def edge_connectivity(g: Graph) -> int:
    """Size of a minimum edge cut; 0 for disconnected graphs and for n <= 1."""
    if g.n <= 1 or not is_connected(g):
        return 0
    best = g.min_degree()
    for t in range(1, g.n):
        best = min(best, local_edge_connectivity(g, 0, t, best))
    return best


def local_vertex_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    """Internally disjoint s-t paths for non-adjacent s, t (vertex splitting)."""
    # vertex v -> in-node 2v, out-node 2v+1
    cap: dict[int, dict[int, int]] = {x: {} for x in range(2 * g.n)}
    for v in range(g.n):
        cap[2 * v][2 * v + 1] = g.n if v in (s, t) else 1
        for u in iter_bits(g.adj[v]):
            cap[2 * v + 1][2 * u] = g.n
    return _max_flow(cap, 2 * s + 1, 2 * t, limit)


def vertex_connectivity(g: Graph) -> int:
    """Minimum vertex cut size; n - 1 for complete graphs, 0 if disconnected."""
    n = g.n
    if n <= 1 or not is_connected(g):
        return 0
    if g.m == n * (n - 1) // 2:
        return n - 1
    best = g.min_degree()
    # Some vertex among the first best+1 lies outside a minimum cut.
    i = 0
    while i <= best and i < n:
        for j in range(n):
            if j != i and not g.adj[i] >> j & 1:
                best = min(best, local_vertex_connectivity(g, i, j, best))
        i += 1
    return best
