"""Simple undirected graphs on vertices 0..n-1 with bitmask adjacency.

A :class:`Graph` is immutable.  ``adj[v]`` is an ``int`` whose bit ``u`` is set
exactly when ``uv`` is an edge.  Every operation here is a pure function that
returns a new graph; operations that relabel vertices also return the label map.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (loops, out-of-range endpoints, ...)."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Edge:
    u: int
    v: int

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise GraphError(f"loop at vertex {self.u}")
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    def __iter__(self) -> Iterator[int]:
        yield self.u
        yield self.v


@dataclass(frozen=True, slots=True)
class VertexPartition:
    """Disjoint named vertex blocks, e.g. the A/B/C split of a max-edge graph."""

    blocks: tuple[frozenset[int], ...]
    names: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            if seen & block:
                raise GraphError("partition blocks overlap")
            seen |= block
        if self.names and len(self.names) != len(self.blocks):
            raise GraphError("one name per block required")

    def __getitem__(self, name: str) -> frozenset[int]:
        return self.blocks[self.names.index(name)]


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside [0, {self.n})")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def _trusted(cls, n: int, adj: Sequence[int]) -> Graph:
        # Skips validation; callers guarantee symmetry and irreflexivity.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        return g

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        out = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def non_edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not self.adj[u] >> v & 1:
                    out.append((u, v))
        return out

    def isolated_vertices(self) -> list[int]:
        return [v for v, row in enumerate(self.adj) if not row]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph._trusted(n, adj)


def empty_graph(n: int) -> Graph:
    return Graph._trusted(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, [full ^ (1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph._trusted(g.n + h.n, list(g.adj) + [row << shift for row in h.adj])


def copies(g: Graph, q: int) -> Graph:
    """``q`` disjoint copies of ``g`` (the graph qG)."""
    out = empty_graph(0)
    for _ in range(q):
        out = disjoint_union(out, g)
    return out


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides (the ``+`` operator)."""
    n = g.n + h.n
    g_side = (1 << g.n) - 1
    h_side = ((1 << n) - 1) ^ g_side
    adj = [row | h_side for row in g.adj] + [(row << g.n) | g_side for row in h.adj]
    return Graph._trusted(n, adj)


def identify_vertices(parts: Sequence[tuple[Graph, int]]) -> tuple[Graph, list[list[int]]]:
    """Glue several graphs together at one chosen vertex each.

    The first graph keeps its labels; the remaining graphs' other vertices are
    appended in order.  Returns the merged graph and, for every input graph, a
    list mapping its old labels to the new ones.
    """
    if not parts:
        raise GraphError("identify_vertices needs at least one graph")
    for g, v in parts:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph on {g.n} vertices")
    first, hub = parts[0]
    edges = list(first.edges())
    maps = [list(range(first.n))]
    n = first.n
    for g, v in parts[1:]:
        mapping = []
        for x in range(g.n):
            if x == v:
                mapping.append(hub)
            else:
                mapping.append(n)
                n += 1
        maps.append(mapping)
        edges.extend((mapping[a], mapping[b]) for a, b in g.edges())
    return from_edge_list(n, edges), maps


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph._trusted(g.n, [full ^ row ^ (1 << v) for v, row in enumerate(g.adj)])


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex ``(a, b)`` of the product is labelled ``a * h.n + b``."""
    edges = []
    for a in range(g.n):
        for b1, b2 in h.edges():
            edges.append((a * h.n + b1, a * h.n + b2))
    for a1, a2 in g.edges():
        for b in range(h.n):
            edges.append((a1 * h.n + b, a2 * h.n + b))
    return from_edge_list(g.n * h.n, edges)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """``G[S]`` relabelled 0..|S|-1 in increasing label order.

    The returned list maps new labels to the original ones.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph on {g.n} vertices")
    index = {v: i for i, v in enumerate(keep)}
    adj = [0] * len(keep)
    for i, v in enumerate(keep):
        row = 0
        for u in iter_bits(g.adj[v]):
            j = index.get(u)
            if j is not None:
                row |= 1 << j
        adj[i] = row
    return Graph._trusted(len(keep), adj), keep


def delete_vertex(g: Graph, v: int) -> tuple[Graph, list[int]]:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} not in graph on {g.n} vertices")
    return induced_subgraph(g, (u for u in range(g.n) if u != v))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph._trusted(g.n, adj)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"cannot add edge ({u}, {v})")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph._trusted(g.n, adj)


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is ``g``'s vertex ``order[i]``."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    adj = [0] * g.n
    for i, v in enumerate(order):
        row = 0
        for u in iter_bits(g.adj[v]):
            row |= 1 << pos[u]
        adj[i] = row
    return Graph._trusted(g.n, adj)


def component_masks(n: int, adj: Sequence[int]) -> list[int]:
    """Connected components as bitmasks, ordered by smallest vertex."""
    seen = 0
    comps = []
    for s in range(n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def connected_components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(iter_bits(c)) for c in component_masks(g.n, g.adj)]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return len(component_masks(g.n, g.adj)) == 1


def octahedron() -> Graph:
    """K_{2,2,2}: the cycle C_4 joined with two non-adjacent vertices."""
    return join(cycle_graph(4), empty_graph(2))
