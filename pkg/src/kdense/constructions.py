"""Parameterised k*-dense constructions, each checked against a certificate.

Every builder returns a :class:`Witness`: the graph plus the predicted vertex
count, edge count, density index and connectivity.  The prediction is checked
by the density engine before the witness is returned; a mismatch raises
:class:`CertificateError` instead of handing back an unverified graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Any, Callable

from .density import density_index
from .graph import (
    Graph,
    VertexPartition,
    cartesian_product,
    complement,
    complete_graph,
    copies,
    cycle_graph,
    delete_edge,
    disjoint_union,
    empty_graph,
    from_edge_list,
    identify_vertices,
    is_connected,
    join,
    octahedron,
    path_graph,
)


class CertificateError(RuntimeError):
    """A built graph disagrees with its predicted parameters."""


class RealizationError(RuntimeError):
    """No admissible extension reaches the requested edge count."""


@dataclass(frozen=True)
class Certificate:
    n: int
    m: int
    k_star: int | None
    connected: bool | None = None

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "m": self.m, "k_star": self.k_star, "connected": self.connected}


@dataclass
class Witness:
    name: str
    params: dict[str, int]
    graph: Graph
    certificate: Certificate
    extra: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        from .formats import to_graph6

        return {
            "name": self.name,
            "params": dict(self.params),
            "graph6": to_graph6(self.graph),
            "certificate": self.certificate.to_json(),
            "verified": True,
        }


def verify_certificate(g: Graph, cert: Certificate) -> None:
    found = Certificate(g.n, g.m, density_index(g),
                        is_connected(g) if cert.connected is not None else None)
    if found != cert:
        raise CertificateError(f"predicted {cert}, built {found}")


def _witness(name: str, params: dict[str, int], g: Graph, cert: Certificate, **extra) -> Witness:
    verify_certificate(g, cert)
    return Witness(name, params, g, cert, extra)


# -- counting ---------------------------------------------------------------

def glued_edge_count(k: int, r: int) -> int:
    return comb(k, 2) + comb(r, 2) + r * (k - r)


def conjecture_value(k: int, n: int) -> int:
    """``q C(k,2) + C(r,2) + r(k-r)`` with ``n - 1 = q(k-1) + r``, ``0 <= r < k-1``."""
    _check_kn(k, n)
    if k == 2:
        return n - 1
    q, r = divmod(n - 1, k - 1)
    return q * comb(k, 2) + comb(r, 2) + r * (k - r)


def four_min(n: int) -> int:
    """Minimum edges of a connected 4*-dense graph on n >= 4 vertices."""
    return 2 * n - 2 if n % 3 == 1 else 2 * n - 1


def min_edges_closed_form(k: int, n: int) -> int:
    _check_kn(k, n)
    if k == 2:
        return n - 1
    if k == 3:
        return -(-3 * (n - 1) // 2)
    if k == 4:
        return four_min(n)
    raise ValueError(f"no closed form for e({k}, n)")


def max_edges_closed_form(k: int, n: int) -> int:
    _check_kn(k, n)
    if n == k:
        return comb(k, 2)
    return n + k - 3 + comb(n - 2, 2)


@dataclass(frozen=True)
class FormulaValue:
    value: int
    status: str  # proven | conjecture | upper-bound-only


def min_edge_formula(k: int, n: int) -> FormulaValue:
    """Predicted e(k, n) with its standing.

    Closed forms for k <= 4 are theorems.  For larger k the clique-chain count
    is a conjecture up to k = 7 and only an upper bound from k = 8 on.
    """
    _check_kn(k, n)
    if k <= 4:
        return FormulaValue(min_edges_closed_form(k, n), "proven")
    status = "conjecture" if k <= 7 else "upper-bound-only"
    return FormulaValue(conjecture_value(k, n), status)


def complement_edge_count(k: int, n: int) -> int:
    return comb(n, 2) - comb(n - k, 2) - k // 2


def _check_kn(k: int, n: int) -> None:
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= n, got k={k}, n={n}")


# -- builders -------------------------------------------------------------

def _glued(k: int, r: int) -> Graph:
    # vertices 0..k-r-1 shared; k-r..k-1 private to the first clique; k..k+r-1 to the second
    shared = list(range(k - r))
    edges = [(a, b) for a in range(k) for b in range(a + 1, k)]
    second = shared + list(range(k, k + r))
    edges += [(a, b) for i, a in enumerate(second) for b in second[i + 1:] if b >= k]
    return from_edge_list(k + r, edges)


def glued_cliques(k: int, r: int) -> Witness:
    """Two K_k sharing ``k - r`` vertices; ``r = 0`` gives K_k.

    The shared vertices are ``0 .. k-r-1``; each is adjacent to everything.
    """
    if k < 2 or not 0 <= r < k:
        raise ValueError(f"need k >= 2 and 0 <= r < k, got k={k}, r={r}")
    g = _glued(k, r)
    return _witness("glued-cliques", {"k": k, "r": r}, g,
                    Certificate(k + r, glued_edge_count(k, r), k, True))


def disconnected_min_family(k: int, n: int) -> Witness:
    """(q-1) K_k plus one glued-cliques component, with ``n = kq + r``."""
    _check_kn(k, n)
    q, r = divmod(n, k)
    g = disjoint_union(copies(complete_graph(k), q - 1), _glued(k, r))
    m = q * comb(k, 2) + comb(r, 2) + r * (k - r)
    return _witness("disconnected-min", {"k": k, "n": n, "q": q, "r": r}, g,
                    Certificate(n, m, k, q == 1))


def clique_chain(k: int, n: int) -> Witness:
    """q blocks sharing the hub vertex 0, with ``n - 1 = q(k-1) + r``.

    The first block is glued_cliques(k, r) attached through a shared vertex
    (so the hub stays adjacent to everything); the others are K_k.
    """
    _check_kn(k, n)
    if k == 2:
        g = path_graph(n) if n <= 2 else from_edge_list(n, [(0, v) for v in range(1, n)])
        return _witness("clique-chain", {"k": 2, "n": n, "q": n - 1, "r": 0}, g,
                        Certificate(n, n - 1, 2, True))
    q, r = divmod(n - 1, k - 1)
    parts = [(_glued(k, r), 0)] + [(complete_graph(k), 0)] * (q - 1)
    g, _ = identify_vertices(parts)
    m = q * comb(k, 2) + comb(r, 2) + r * (k - r)
    return _witness("clique-chain", {"k": k, "n": n, "q": q, "r": r}, g,
                    Certificate(n, m, k, True), hub=0)


def _k4_minus_e_at_hub() -> Graph:
    # hub 0 and 1 have degree 3; 2 and 3 are the non-adjacent pair
    return from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def min_edge_construction(k: int, n: int) -> Witness:
    """Connected k*-dense graph with exactly e(k, n) edges, k in {2, 3, 4}.

    k = 2 gives the path; k = 3 a friendship graph (one triangle replaced by
    K_4 - e for even n); k = 4 a clique chain of K_4's with K_5 - e or
    K_2 + 2K_2 as the first block.  ``extra`` names the hub ``w`` and a
    witness edge ``(u1, u2)`` whose multiplicity equals k - 2.
    """
    if k not in (2, 3, 4):
        raise ValueError(f"min_edge_construction supports k in {{2, 3, 4}}, got {k}")
    _check_kn(k, n)
    target = min_edges_closed_form(k, n)
    params = {"k": k, "n": n}
    if k == 2:
        return _witness("min-edge", params, path_graph(n), Certificate(n, target, 2, True),
                        u1=0, u2=1)
    if k == 3:
        ell = (n - 1) // 2
        if n % 2:
            parts = [(complete_graph(3), 0)] * ell
        else:
            parts = [(complete_graph(3), 0)] * (ell - 1) + [(_k4_minus_e_at_hub(), 0)]
        g, maps = identify_vertices(parts)
        # two non-hub vertices of the first block; they share only the hub
        u1, u2 = maps[0][1], maps[0][2]
        return _witness("min-edge", params, g, Certificate(n, target, 3, True),
                        w=0, u1=u1, u2=u2)
    chain = clique_chain(4, n)
    if chain.graph.m != target:
        raise CertificateError(f"clique chain has {chain.graph.m} edges, e(4,{n}) = {target}")
    return Witness("min-edge", params, chain.graph, chain.certificate, {"w": 0})


def complement_construction(k: int, n: int) -> Witness:
    """Complement of K_{n-k} plus floor(k/2) K_2 (plus K_1 for odd k)."""
    if k < 2 or n - k < 2:
        raise ValueError(f"need k >= 2 and n - k >= 2, got k={k}, n={n}")
    h = complete_graph(n - k)
    h = disjoint_union(h, copies(complete_graph(2), k // 2))
    if k % 2:
        h = disjoint_union(h, empty_graph(1))
    g = complement(h)
    return _witness("complement", {"k": k, "n": n}, g,
                    Certificate(n, complement_edge_count(k, n), k, True))


def max_edge_construction(k: int, n: int) -> Witness:
    """Connected k*-dense graph with E(k, n) edges.

    For n >= k + 2: K_{n-2} on 0..n-3, plus u = n-2 and v = n-1 with the
    clique split into A, B, C; u sees A, B and v, v sees B, C and u.
    ``extra["partition"]`` holds the split.
    """
    _check_kn(k, n)
    params = {"k": k, "n": n}
    target = max_edges_closed_form(k, n)
    if n == k:
        return _witness("max-edge", params, complete_graph(k), Certificate(n, target, k, True))
    if n == k + 1:
        g = delete_edge(complete_graph(n), n - 2, n - 1)
        return _witness("max-edge", params, g, Certificate(n, target, k, True))
    size_a = (n - k) // 2
    size_b = k - 2
    a = range(size_a)
    b = range(size_a, size_a + size_b)
    c = range(size_a + size_b, n - 2)
    u, v = n - 2, n - 1
    edges = [(x, y) for x in range(n - 2) for y in range(x + 1, n - 2)]
    edges += [(u, x) for x in (*a, *b)] + [(v, x) for x in (*b, *c)] + [(u, v)]
    g = from_edge_list(n, edges)
    part = VertexPartition((frozenset(a), frozenset(b), frozenset(c), frozenset({u, v})),
                           ("A", "B", "C", "uv"))
    return _witness("max-edge", params, g, Certificate(n, target, k, True), partition=part)


# -- realization ----------------------------------------------------------

def _greedy_extend(g: Graph, k: int, a: int, admissible: Callable[[list[int], int, int], bool]) -> Graph:
    # Smallest admissible non-edge first; k* is rechecked after each addition.
    adj = list(g.adj)
    m = g.m
    n = g.n
    while m < a:
        for x in range(n):
            found = None
            for y in range(x + 1, n):
                if adj[x] >> y & 1:
                    continue
                if (adj[x] & adj[y]).bit_count() < k - 2:
                    continue
                if admissible(adj, x, y):
                    found = y
                    break
            if found is not None:
                break
        else:
            raise RealizationError(f"admissible pairs exhausted at {m} edges, wanted {a}")
        adj[x] |= 1 << found
        adj[found] |= 1 << x
        m += 1
        ks = density_index(Graph._trusted(n, adj))
        if ks != k:
            raise CertificateError(f"adding ({x}, {found}) moved k* to {ks}")
    return Graph._trusted(n, adj)


def _realize_2(n: int, a: int) -> Graph:
    # u1 = 0 keeps degree one, so u1u2 stays in no triangle
    return _greedy_extend(path_graph(n), 2, a, lambda adj, x, y: x != 0)


def _realize_3(n: int, a: int) -> Graph:
    base = min_edge_construction(3, n)
    w, u1, u2 = base.extra["w"], base.extra["u1"], base.extra["u2"]
    if n == 4:
        return base.graph

    def admissible(adj, x, y):
        bx, by = 1 << x, 1 << y
        nu1 = adj[u1] | (by if x == u1 else bx if y == u1 else 0)
        nu2 = adj[u2] | (by if x == u2 else bx if y == u2 else 0)
        return nu1 & nu2 == 1 << w

    return _greedy_extend(base.graph, 3, a, admissible)


# Hub-glued blocks for k = 4.  A block has b vertices including the hub.
#   F1: K_3 + H on b - 3 >= 1 vertices; "exact" when H has an isolated
#       vertex, whose edges to the hub side then lie in exactly two triangles.
#   F2: K_2 + H on b - 2 >= 2 vertices, H without isolated vertices; "exact"
#       when H has a vertex of degree one (built as in the k = 2 case).
# Every block is 4-dense with the hub adjacent to all of it, so gluing blocks
# at the hub keeps every multiplicity; one exact block makes k* equal 4.

def _f1_range(b: int, exact: bool) -> tuple[int, int] | None:
    h = b - 3
    if h < 1:
        return None
    lo = 3 + 3 * h
    hi = lo + (comb(h - 1, 2) if exact else comb(h, 2))
    return lo, hi


def _f2_range(b: int, exact: bool) -> tuple[int, int] | None:
    h = b - 2
    if h < 2:
        return None
    lo = 1 + 2 * h + -(-h // 2)
    hi = 1 + 2 * h + (1 + comb(h - 1, 2) if exact else comb(h, 2))
    return lo, hi


def _block_options(b: int, exact: bool) -> list[tuple[str, int, int]]:
    out = []
    for name, fn in (("F1", _f1_range), ("F2", _f2_range)):
        rng = fn(b, exact)
        if rng is not None:
            out.append((name, *rng))
    return out


@lru_cache(maxsize=None)
def _reach(rest: int, need_exact: bool) -> frozenset[int]:
    """Edge counts reachable by blocks covering ``rest`` non-hub vertices."""
    if rest == 0:
        return frozenset() if need_exact else frozenset({0})
    out = set()
    for b in range(4, rest + 2):
        for exact in ((True, False) if need_exact else (False,)):
            for _, lo, hi in _block_options(b, exact):
                tail = _reach(rest - (b - 1), need_exact and not exact)
                for e in range(lo, hi + 1):
                    out.update(e + t for t in tail)
    return frozenset(out)


def _build_block(kind: str, b: int, e: int, exact: bool) -> Graph:
    if kind == "F1":
        h = b - 3
        extra = e - (3 + 3 * h)
        verts = range(1, h) if exact else range(h)
        pool = [(x, y) for x in verts for y in verts if x < y]
        return join(complete_graph(3), from_edge_list(h, pool[:extra]))
    h = b - 2
    base = [(i, i + 1) for i in range(0, h - 1, 2)]
    if h % 2:
        base.append((h - 2, h - 1))
    need = e - (1 + 2 * h) - len(base)
    chosen = set(base)
    pool = [(x, y) for x in range(h) for y in range(x + 1, h) if (x, y) not in chosen]
    if exact:
        pool = [p for p in pool if 0 not in p]
    return join(complete_graph(2), from_edge_list(h, base + pool[:need]))


def _realize_4(n: int, a: int) -> Graph:
    if a == four_min(n):
        return min_edge_construction(4, n).graph
    if a not in _reach(n - 1, True):
        raise RealizationError(
            f"no connected 4*-dense graph on {n} vertices with {a} edges is reachable "
            f"by hub-glued blocks")
    parts = []
    rest, total, need_exact = n - 1, a, True
    while rest:
        done = False
        for b in range(rest + 1, 3, -1):
            for exact in ((True, False) if need_exact else (False,)):
                for kind, lo, hi in _block_options(b, exact):
                    tail = _reach(rest - (b - 1), need_exact and not exact)
                    for e in range(min(hi, total), lo - 1, -1):
                        if total - e in tail:
                            parts.append((_build_block(kind, b, e, exact), 0))
                            rest -= b - 1
                            total -= e
                            need_exact = need_exact and not exact
                            done = True
                            break
                    if done:
                        break
                if done:
                    break
            if done:
                break
        if not done:
            raise RealizationError(f"block search failed with {rest} vertices left")
    g, _ = identify_vertices(parts)
    return g


def realization(k: int, n: int, a: int) -> Witness:
    """A connected k*-dense graph on n vertices with exactly ``a`` edges.

    k = 2 and k = 3 extend the minimum construction greedily, adding the
    smallest admissible non-edge at each step.  k = 4 glues dense blocks at a
    hub; see ``_realize_4``.  Raises ``ValueError`` when ``a`` lies outside
    [e(k, n), E(k, n)] and :class:`RealizationError` when no graph is found.
    """
    if k not in (2, 3, 4):
        raise ValueError(f"realization supports k in {{2, 3, 4}}, got {k}")
    _check_kn(k, n)
    lo, hi = min_edges_closed_form(k, n), max_edges_closed_form(k, n)
    if not lo <= a <= hi:
        raise ValueError(f"a={a} outside [e({k},{n}), E({k},{n})] = [{lo}, {hi}]")
    if n <= k + 1:
        g = max_edge_construction(k, n).graph
    elif k == 2:
        g = _realize_2(n, a)
    elif k == 3:
        g = _realize_3(n, a)
    else:
        g = _realize_4(n, a)
    return _witness("realization", {"k": k, "n": n, "a": a}, g, Certificate(n, a, k, True))


# -- catalogue --------------------------------------------------------------

def c4_torus(copies_: int) -> Witness:
    """Cartesian product of ``copies_`` cycles C_4."""
    if copies_ < 1:
        raise ValueError("need at least one copy of C_4")
    g = cycle_graph(4)
    for _ in range(copies_ - 1):
        g = cartesian_product(g, cycle_graph(4))
    n = 4 ** copies_
    return _witness("c4-torus", {"a": copies_}, g,
                    Certificate(n, n * copies_, 2, True), connectivity=2 * copies_)


def cut_vertex_cliques(k: int) -> Witness:
    """Two K_k sharing one vertex."""
    if k < 2:
        raise ValueError("need k >= 2")
    g, _ = identify_vertices([(complete_graph(k), 0), (complete_graph(k), 0)])
    return _witness("cut-vertex-cliques", {"k": k}, g,
                    Certificate(2 * k - 1, 2 * comb(k, 2), k, True), connectivity=1)


def octahedron_witness() -> Witness:
    return _witness("octahedron", {}, octahedron(), Certificate(6, 12, 4, True), omega=3)


def special_examples() -> list[Witness]:
    out = [c4_torus(a) for a in (1, 2, 3)]
    out += [cut_vertex_cliques(k) for k in range(3, 8)]
    out.append(octahedron_witness())
    return out


def upper_bound_comparison(k: int, n: int) -> dict[str, Any]:
    """Clique-chain count against the complement count, both built and certified."""
    chain = clique_chain(k, n)
    comp = complement_construction(k, n)
    return {"k": k, "n": n, "clique_chain": chain.graph.m, "complement": comp.graph.m,
            "smaller": "clique_chain" if chain.graph.m < comp.graph.m
            else "complement" if comp.graph.m < chain.graph.m else "tie"}


# name -> (builder, parameter names in call order)
RECIPES: dict[str, tuple[Callable[..., Witness], tuple[str, ...]]] = {
    "glued-cliques": (glued_cliques, ("k", "r")),
    "disconnected-min": (disconnected_min_family, ("k", "n")),
    "clique-chain": (clique_chain, ("k", "n")),
    "min-edge": (min_edge_construction, ("k", "n")),
    "complement": (complement_construction, ("k", "n")),
    "max-edge": (max_edge_construction, ("k", "n")),
    "realization": (realization, ("k", "n", "a")),
    "c4-torus": (c4_torus, ("copies",)),
    "cut-vertex-cliques": (cut_vertex_cliques, ("k",)),
    "octahedron": (octahedron_witness, ()),
}


def build_recipe(name: str, **params: int | None) -> Witness:
    if name not in RECIPES:
        raise KeyError(name)
    fn, names = RECIPES[name]
    args = []
    for p in names:
        if params.get(p) is None:
            raise ValueError(f"recipe {name} needs --{p}")
        args.append(params[p])
    return fn(*args)
