"""Edge multiplicity, k-dense peeling and the k*-density index.

The edge multiplicity of ``uv`` is ``|N(u) & N(v)|``, the number of triangles
through ``uv``.  ``D_k(G)`` is the largest edge set in which every edge keeps
multiplicity at least ``k - 2`` counted inside the set; it is computed by
peeling and returned as a spanning subgraph of ``G`` on the original labels,
so its vertex set is the set of non-isolated vertices of the result.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, GraphError, component_masks, iter_bits


def edge_multiplicity(g: Graph, u: int, v: int) -> int:
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    return (g.adj[u] & g.adj[v]).bit_count()


def all_multiplicities(g: Graph) -> dict[tuple[int, int], int]:
    adj = g.adj
    return {(u, v): (adj[u] & adj[v]).bit_count() for u, v in g.edges()}


def min_multiplicity(g: Graph) -> int | None:
    adj = g.adj
    best = None
    for u in range(g.n):
        row = adj[u]
        for v in iter_bits(row >> (u + 1)):
            c = (row & adj[u + 1 + v]).bit_count()
            if best is None or c < best:
                best = c
    return best


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")


def is_k_dense(g: Graph, k: int) -> bool:
    """True when ``D_k(G) = G``: no isolated vertex and every edge in >= k-2 triangles."""
    _check_k(k)
    if g.n == 0 or any(row == 0 for row in g.adj):
        return False
    return min_multiplicity(g) >= k - 2


def density_index(g: Graph) -> int | None:
    """k* of ``g``, or ``None`` when undefined (no vertices or an isolated vertex)."""
    if g.n == 0 or any(row == 0 for row in g.adj):
        return None
    return 2 + min_multiplicity(g)


def _peel(n: int, adj: list[int], threshold: int) -> list[int]:
    # Worklist peeling; mutates and returns adj.
    support: dict[tuple[int, int], int] = {}
    stack = []
    for u in range(n):
        row = adj[u]
        for v in iter_bits(row >> (u + 1)):
            v += u + 1
            s = (row & adj[v]).bit_count()
            support[(u, v)] = s
            if s < threshold:
                stack.append((u, v))
    removed = set()
    while stack:
        u, v = stack.pop()
        if (u, v) in removed:
            continue
        removed.add((u, v))
        common = adj[u] & adj[v]
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        for w in iter_bits(common):
            for a in (u, v):
                key = (a, w) if a < w else (w, a)
                s = support[key] - 1
                support[key] = s
                if s == threshold - 1:
                    stack.append(key)
    return adj


def k_dense_subgraph(g: Graph, k: int) -> Graph:
    """``D_k(G)`` as a spanning subgraph of ``g`` (peeled edges removed)."""
    _check_k(k)
    return Graph._trusted(g.n, _peel(g.n, list(g.adj), k - 2))


def edge_density_levels(g: Graph) -> dict[tuple[int, int], int]:
    """For every edge, the largest k with the edge in ``D_k(G)``.

    One ascending bucket pass, the triangle analogue of core decomposition.
    """
    adj = list(g.adj)
    support = {}
    for u, v in g.edges():
        support[(u, v)] = (adj[u] & adj[v]).bit_count()
    if not support:
        return {}
    maxs = max(support.values())
    buckets: list[set[tuple[int, int]]] = [set() for _ in range(maxs + 1)]
    for e, s in support.items():
        buckets[s].add(e)
    level = {}
    current = 0
    remaining = len(support)
    while remaining:
        while not buckets[current]:
            current += 1
        e = min(buckets[current])
        buckets[current].discard(e)
        remaining -= 1
        u, v = e
        level[e] = current + 2
        common = adj[u] & adj[v]
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        for w in iter_bits(common):
            for a in (u, v):
                key = (a, w) if a < w else (w, a)
                s = support[key]
                if s > current:
                    buckets[s].discard(key)
                    buckets[s - 1].add(key)
                    support[key] = s - 1
    return level


def _community_sets(g: Graph) -> list[frozenset[int]]:
    comps = [c for c in component_masks(g.n, g.adj) if c & (c - 1)]
    sets = [frozenset(iter_bits(c)) for c in comps]
    sets.sort(key=lambda s: (-len(s), min(s)))
    return sets


def k_dense_communities(g: Graph, k: int) -> list[frozenset[int]]:
    """Components of ``D_k(G)`` with an edge, largest first, ties by smallest label."""
    return _community_sets(k_dense_subgraph(g, k))


@dataclass
class DenseLevel:
    k: int
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]
    communities: list[frozenset[int]]


@dataclass
class DenseDecomposition:
    levels: dict[int, DenseLevel] = field(default_factory=dict)
    k_max: int | None = None

    def __getitem__(self, k: int) -> DenseLevel:
        return self.levels[k]


def dense_hierarchy(g: Graph) -> DenseDecomposition:
    """``D_k`` and its communities for k = 2 up to the first empty level."""
    levels = edge_density_levels(g)
    out = DenseDecomposition()
    k = 2
    while True:
        edges = frozenset(e for e, lv in levels.items() if lv >= k)
        adj = [0] * g.n
        for u, v in edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        sub = Graph._trusted(g.n, adj)
        verts = frozenset(v for v in range(g.n) if adj[v])
        out.levels[k] = DenseLevel(k, verts, edges, _community_sets(sub))
        if not edges:
            break
        out.k_max = k
        k += 1
    return out


@dataclass
class BruteForceResult:
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]
    sub_communities: list[frozenset[int]]


BRUTE_FORCE_MAX_N = 16


def _subset_min_multiplicities(g: Graph) -> dict[int, int]:
    """Minimum in-subgraph multiplicity for every connected vertex subset with an edge."""
    out = {}
    adj = g.adj
    for mask in range(1, 1 << g.n):
        if not mask & (mask - 1):
            continue
        best = None
        for u in iter_bits(mask):
            row = adj[u] & mask
            for v in iter_bits(row >> (u + 1)):
                c = (row & adj[u + 1 + v]).bit_count()
                if best is None or c < best:
                    best = c
        if best is None:
            continue
        start = mask & -mask
        comp = frontier = start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & mask & ~comp
            comp |= frontier
        if comp == mask:
            out[mask] = best
    return out


def brute_force_k_dense(g: Graph, k: int, _table: dict[int, int] | None = None) -> BruteForceResult:
    """Subset oracle: maximal vertex sets S with G[S] connected and every edge
    of G[S] in at least k-2 triangles of G[S].

    Independent of the peeling code; exponential, guarded at n <= 16.
    """
    _check_k(k)
    if g.n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}")
    table = _subset_min_multiplicities(g) if _table is None else _table
    good = [mask for mask, mm in table.items() if mm >= k - 2]
    good.sort(key=lambda s: -s.bit_count())
    maximal: list[int] = []
    for s in good:
        if not any(s & big == s for big in maximal):
            maximal.append(s)
    verts = 0
    edges = set()
    for s in maximal:
        verts |= s
        for u in iter_bits(s):
            for v in iter_bits(g.adj[u] & s):
                if u < v:
                    edges.add((u, v))
    subs = [frozenset(iter_bits(s)) for s in maximal]
    subs.sort(key=lambda s: (-len(s), sorted(s)))
    return BruteForceResult(frozenset(iter_bits(verts)), frozenset(edges), subs)


def k_core(g: Graph, k: int) -> frozenset[int]:
    """Vertex set of the k-core under the min-degree ``k - 1`` convention.

    Note the shift: this "k-core" keeps vertices of degree at least k-1,
    so the complete graph K_k is its own k-core.
    """
    adj = list(g.adj)
    alive = (1 << g.n) - 1
    stack = [v for v in range(g.n) if adj[v].bit_count() < k - 1]
    while stack:
        v = stack.pop()
        if not alive >> v & 1:
            continue
        alive &= ~(1 << v)
        for u in iter_bits(adj[v] & alive):
            adj[u] &= ~(1 << v)
            if adj[u].bit_count() == k - 2:
                stack.append(u)
    return frozenset(iter_bits(alive))


def core_number(g: Graph) -> int:
    """Largest k whose k-core (min degree k - 1) is non-empty; 0 for the null graph."""
    if g.n == 0:
        return 0
    k = 1
    while k_core(g, k + 1):
        k += 1
    return k


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    adj = g.adj
    out = []
    for a, b, c in combinations(range(g.n), 3):
        if adj[a] >> b & 1 and adj[a] >> c & 1 and adj[b] >> c & 1:
            out.append((a, b, c))
    return out


def multiplicity_histogram(g: Graph) -> dict[int, int]:
    return dict(sorted(Counter(all_multiplicities(g).values()).items()))


SPECIAL_LABELS = ("2*-dense", "(n-1)*-dense", "n*-dense", "has-isolated-vertex", "not-dense")


def classify_special(g: Graph) -> set[str]:
    """Structural labels for the classified extremes of k*-density.

    Each label is decided from structure alone (empty common neighbourhood,
    K_n, K_n minus an edge) and then cross-checked against ``density_index``.
    """
    labels = set()
    n = g.n
    isolated = any(row == 0 for row in g.adj)
    if isolated:
        labels.add("has-isolated-vertex")
    k_star = density_index(g)
    if k_star is None:
        labels.add("not-dense")
        return labels
    if any(not (g.adj[u] & g.adj[v]) for u, v in g.edges()):
        labels.add("2*-dense")
    missing = n * (n - 1) // 2 - g.m
    if missing == 0:
        labels.add("n*-dense")
    elif missing == 1 and n >= 3:
        labels.add("(n-1)*-dense")
    expected = {2} if "2*-dense" in labels else set()
    if "n*-dense" in labels:
        expected.add(n)
    if "(n-1)*-dense" in labels:
        expected.add(n - 1)
    if expected and k_star not in expected:
        raise AssertionError(f"classification {labels} disagrees with k*={k_star}")
    if k_star == 2 and "2*-dense" not in labels:
        raise AssertionError("k*=2 but every edge lies in a triangle")
    if k_star == n and "n*-dense" not in labels:
        raise AssertionError(f"k*={n}=n but graph is not complete")
    if n >= 3 and k_star == n - 1 and "(n-1)*-dense" not in labels and "2*-dense" not in labels:
        raise AssertionError(f"k*=n-1 but graph is not K_n - e")
    return labels
