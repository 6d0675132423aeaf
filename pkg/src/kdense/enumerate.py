"""Isomorph-free generation of small graphs.

Graphs grow one vertex at a time.  A graph on j+1 vertices is produced from a
graph on j vertices by adding a vertex that must be a minimum-degree vertex of
the child, and among those must maximise the sorted degree sequence of its
neighbourhood.  Every isomorphism class is reachable this way (delete such a
vertex), and each level is deduplicated by canonical code, so the output has
exactly one canonical representative per class.

Deleting a minimum-degree vertex lowers every degree by at most one, which
gives hereditary bounds used for pruning at every level:

* the degree floor at level j is ``min_degree - (n - j)``;
* the degree ceiling ``max_degree`` holds at every level;
* the degree of each later added vertex is at least its level floor and at
  most one more than the previous level's minimum degree, which bounds the
  final edge count from both sides.

Windows of dense graphs are generated through complements, where the degree
and edge constraints swap roles.

Work is split by parent graph into shards; shard results are merged by
canonical code, so the output is identical for any worker count.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .canon import canonical_order
from .graph import Graph, complement, component_masks, iter_bits

DEFAULT_MAX_N = 10


class BudgetExhausted(RuntimeError):
    def __init__(self, message: str, nodes: int, level: int):
        super().__init__(message)
        self.nodes = nodes
        self.level = level


@dataclass(frozen=True)
class SearchConstraints:
    n: int
    m_lo: int = 0
    m_hi: int | None = None
    min_degree: int | None = None
    max_degree: int | None = None
    connected: bool = True
    k: int | None = None
    max_nodes: int | None = None
    max_seconds: float | None = None

    def __post_init__(self) -> None:
        full = self.n * (self.n - 1) // 2
        if self.m_hi is None:
            object.__setattr__(self, "m_hi", full)
        if self.min_degree is None:
            object.__setattr__(self, "min_degree", self.k - 1 if self.k is not None else 0)
        if self.max_degree is None:
            object.__setattr__(self, "max_degree", max(self.n - 1, 0))
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not 0 <= self.m_lo or self.m_hi > full:
            raise ValueError(f"edge range must lie within [0, {full}]")


@dataclass
class EnumerationResult:
    graphs: list[Graph]
    nodes: int
    seconds: float
    complemented: bool


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("KDENSE_THREADS", "1")))
    except ValueError:
        return 1


def _level_ok(j: int, m: int, dmin_j: int, dmax_j: int, p: tuple[int, ...]) -> bool:
    n, m_lo, m_hi, dmin, dmax = p
    if dmax_j > dmax or dmin_j < dmin - (n - j):
        return False
    lo_sum = hi_sum = 0
    for i in range(1, n - j + 1):
        lo = max(dmin - (n - j - i), 0)
        hi = min(j + i - 1, dmin_j + i, dmax)
        if lo > hi:
            return False
        lo_sum += lo
        hi_sum += hi
    return m + lo_sum <= m_hi and m + hi_sum >= m_lo


def _expand(parents: list[tuple[int, ...]], p: tuple[int, ...]) -> tuple[dict[int, tuple[int, ...]], int]:
    """Children of each parent (level j -> j+1); returns code -> canonical adj."""
    n, m_lo, m_hi, dmin, dmax = p
    out: dict[int, tuple[int, ...]] = {}
    nodes = 0
    for adj in parents:
        j = len(adj)
        degs = [row.bit_count() for row in adj]
        m = sum(degs) // 2
        dpar = min(degs) if j else 0
        floor = max(dmin - (n - j - 1), 0)
        top = min(dpar + 1, j, dmax)
        by_deg: dict[int, int] = {}
        for v, d in enumerate(degs):
            by_deg[d] = by_deg.get(d, 0) | (1 << v)
        blocked = by_deg.get(dmax, 0)
        for s in range(floor, top + 1):
            forced = by_deg.get(s - 1, 0) if s else 0
            if forced & blocked:
                continue
            need = s - forced.bit_count()
            if need < 0:
                continue
            free = [v for v in range(j) if not (forced | blocked) >> v & 1]
            child_m = m + s
            if child_m > m_hi:
                continue
            for extra in combinations(free, need):
                nbrs = forced
                for v in extra:
                    nbrs |= 1 << v
                child = [row | (1 << j) if nbrs >> u & 1 else row for u, row in enumerate(adj)]
                child.append(nbrs)
                cdegs = [d + (nbrs >> u & 1) for u, d in enumerate(degs)]
                cdegs.append(s)
                ties = [u for u in range(j) if cdegs[u] == s]
                if ties:
                    key = sorted(cdegs[u] for u in iter_bits(nbrs))
                    if any(sorted(cdegs[w] for w in iter_bits(child[u])) > key for u in ties):
                        continue
                if not _level_ok(j + 1, child_m, s, max(cdegs), p):
                    continue
                nodes += 1
                code, order = canonical_order(j + 1, child)
                if code in out:
                    continue
                pos = [0] * (j + 1)
                for i, v in enumerate(order):
                    pos[v] = i
                canon = [0] * (j + 1)
                for i, v in enumerate(order):
                    row = 0
                    for u in iter_bits(child[v]):
                        row |= 1 << pos[u]
                    canon[i] = row
                out[code] = tuple(canon)
    return out, nodes


def _shards(items: list, count: int) -> list[list]:
    size = -(-len(items) // count) if items else 1
    return [items[i:i + size] for i in range(0, len(items), size)]


def _generate(n: int, m_lo: int, m_hi: int, dmin: int, dmax: int,
              workers: int, max_nodes: int | None, max_seconds: float | None) -> tuple[list[tuple[int, ...]], int]:
    p = (n, m_lo, m_hi, dmin, dmax)
    start = time.monotonic()
    if n == 0:
        return [()], 0
    level: list[tuple[int, ...]] = [(0,)] if _level_ok(1, 0, 0, 0, p) else []
    nodes = 0
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for j in range(1, n):
            merged: dict[int, tuple[int, ...]] = {}
            if pool is not None and len(level) > 1:
                futures = [pool.submit(_expand, chunk, p) for chunk in _shards(level, workers * 4)]
                results = [f.result() for f in futures]
            else:
                results = []
                for chunk in _shards(level, max(1, len(level) // 256 + 1)):
                    results.append(_expand(chunk, p))
                    if max_seconds is not None and time.monotonic() - start > max_seconds:
                        raise BudgetExhausted(f"time budget exhausted at level {j + 1}", nodes, j + 1)
            for found, count in results:
                nodes += count
                merged.update(found)
            level = [merged[c] for c in sorted(merged)]
            if max_nodes is not None and nodes > max_nodes:
                raise BudgetExhausted(f"node budget exhausted at level {j + 1}", nodes, j + 1)
            if max_seconds is not None and time.monotonic() - start > max_seconds:
                raise BudgetExhausted(f"time budget exhausted at level {j + 1}", nodes, j + 1)
    finally:
        if pool is not None:
            pool.shutdown()
    return level, nodes


@lru_cache(maxsize=64)
def _cached(n: int, m_lo: int, m_hi: int, dmin: int, dmax: int, connected: bool,
            workers: int, max_nodes: int | None, max_seconds: float | None) -> EnumerationResult:
    start = time.monotonic()
    full = n * (n - 1) // 2
    flip = n > 1 and m_lo + m_hi > full
    if flip:
        raw, nodes = _generate(n, full - m_hi, full - m_lo, n - 1 - dmax, n - 1 - dmin,
                               workers, max_nodes, max_seconds)
    else:
        raw, nodes = _generate(n, m_lo, m_hi, dmin, dmax, workers, max_nodes, max_seconds)
    graphs = []
    for adj in raw:
        g = Graph._trusted(n, adj)
        if flip:
            g = complement(g)
        m = g.m
        if not m_lo <= m <= m_hi:
            continue
        if connected and (n == 0 or len(component_masks(n, g.adj)) != 1):
            continue
        graphs.append(g)
    return EnumerationResult(graphs, nodes, time.monotonic() - start, flip)


def enumerate_graphs(c: SearchConstraints, workers: int | None = None,
                     max_n: int = DEFAULT_MAX_N) -> EnumerationResult:
    """One representative per isomorphism class meeting the constraints.

    Raises :class:`BudgetExhausted` if the node or time budget runs out and
    ``ValueError`` for ``n > max_n``.
    """
    if c.n > max_n:
        raise ValueError(f"n={c.n} exceeds the enumeration guard {max_n}")
    w = worker_count() if workers is None else workers
    res = _cached(c.n, c.m_lo, c.m_hi, c.min_degree, c.max_degree, c.connected,
                  w, c.max_nodes, c.max_seconds)
    return EnumerationResult(list(res.graphs), res.nodes, res.seconds, res.complemented)


def enumerate_connected(c: SearchConstraints, workers: int | None = None,
                        max_n: int = DEFAULT_MAX_N) -> Iterator[Graph]:
    if not c.connected:
        c = replace(c, connected=True)
    yield from enumerate_graphs(c, workers, max_n).graphs
