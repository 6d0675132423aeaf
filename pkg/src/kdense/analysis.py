"""Executable checks of the general k-density facts, and the JSON analysis report."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .density import (
    dense_hierarchy,
    density_index,
    is_k_dense,
    min_multiplicity,
    multiplicity_histogram,
    triangles,
    core_number,
)
from .graph import Graph, delete_vertex, is_connected, iter_bits
from .structure import clique_number, edge_connectivity


@dataclass
class CheckResult:
    id: str
    passed: bool
    witness: Any = None
    skipped: list[int] = field(default_factory=list)

    def to_json(self) -> dict[str, Any]:
        out = {"id": self.id, "pass": self.passed, "witness": self.witness}
        if self.skipped:
            out["skipped"] = self.skipped
        return out


def _check_triangle_equivalence(g: Graph) -> CheckResult:
    # Count triangles per edge by explicit listing, independent of bit tricks.
    per_edge = {e: 0 for e in g.edges()}
    for a, b, c in triangles(g):
        per_edge[(a, b)] += 1
        per_edge[(a, c)] += 1
        per_edge[(b, c)] += 1
    no_isolated = g.n > 0 and not g.isolated_vertices()
    for k in range(2, g.n + 2):
        by_triangles = no_isolated and all(c >= k - 2 for c in per_edge.values())
        if by_triangles != is_k_dense(g, k):
            return CheckResult("2.1", False, {"k": k, "triangle_test": by_triangles})
    return CheckResult("2.1", True)


def _check_degree(g: Graph, k: int) -> CheckResult:
    adj = g.adj
    for v in range(g.n):
        d = adj[v].bit_count()
        if d < k - 1:
            return CheckResult("2.2", False, {"vertex": v, "degree": d, "k": k})
        if d == k - 1:
            nbrs = adj[v]
            for u in iter_bits(nbrs):
                if (adj[u] & nbrs) != nbrs & ~(1 << u):
                    return CheckResult("2.2", False, {"vertex": v, "not_in_clique_with": u})
    return CheckResult("2.2", True)


def _check_deletion(g: Graph, k: int) -> CheckResult:
    skipped = []
    for v in range(g.n):
        h, _ = delete_vertex(g, v)
        sub = density_index(h)
        if sub is None:
            skipped.append(v)
            continue
        if sub < k - 1:
            return CheckResult("2.3", False, {"vertex": v, "k_star_after": sub, "k": k}, skipped)
    return CheckResult("2.3", True, None, skipped)


def _check_min_degree_condition(g: Graph) -> CheckResult:
    n = g.n
    delta = g.min_degree()
    for kk in range(2, n + 1):
        # delta >= (n + kk)/2 - 1, in integers
        if 2 * (delta + 1) >= n + kk and not is_k_dense(g, kk):
            return CheckResult("2.4", False, {"k": kk, "min_degree": delta})
    return CheckResult("2.4", True)


def _check_edge_connectivity(g: Graph, k: int) -> CheckResult:
    if not is_connected(g):
        return CheckResult("2.5", True, {"connected": False})
    lam = edge_connectivity(g)
    return CheckResult("2.5", lam >= k - 1, {"edge_connectivity": lam, "k": k})


def check_propositions(g: Graph) -> list[CheckResult]:
    """Run the general k-density checks at k = k*(g).

    Items that need k* are reported as skipped-and-passing when k* is
    undefined.  Vertices whose deletion leaves an isolated vertex are listed
    under ``skipped`` of item 2.3 and never count as failures.
    """
    out = [_check_triangle_equivalence(g), _check_min_degree_condition(g)]
    k = density_index(g)
    if k is None:
        for pid in ("2.2", "2.3", "2.5"):
            out.append(CheckResult(pid, True, {"k_star": None}))
    else:
        out.append(_check_degree(g, k))
        out.append(_check_deletion(g, k))
        out.append(_check_edge_connectivity(g, k))
    out.sort(key=lambda r: r.id)
    return out


def analyze(g: Graph) -> dict[str, Any]:
    """The density report as a JSON-ready dict."""
    decomposition = dense_hierarchy(g)
    mm = min_multiplicity(g)
    communities = {
        str(k): [sorted(c) for c in level.communities]
        for k, level in decomposition.levels.items()
        if level.communities
    }
    return {
        "n": g.n,
        "m": g.m,
        "degree_min": g.min_degree(),
        "degree_max": g.max_degree(),
        "k_star": density_index(g),
        "multiplicity_min": mm,
        "multiplicity_histogram": {str(k): v for k, v in multiplicity_histogram(g).items()},
        "communities_per_k": communities,
        "hierarchy": {"omega": clique_number(g), "core": core_number(g)},
        "proposition_checks": [r.to_json() for r in check_propositions(g)],
    }
