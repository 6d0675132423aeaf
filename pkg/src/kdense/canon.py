"""Canonical labelling of small graphs.

Equitable partition refinement, then individualisation of the vertices of the
first smallest non-singleton cell, keeping the leaf with the largest adjacency
code.  Two kinds of pruning keep symmetric graphs cheap:

* twins (equal open or closed neighbourhoods) are interchangeable, so only one
  twin per class is individualised in a cell;
* automorphisms discovered at leaves prune siblings in the same orbit of the
  subgroup that fixes the current individualisation prefix.

Correctness is exercised up to n = 12.  The search is exponential in the worst
case and is not meant to compete with dedicated tools on large inputs.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, iter_bits, relabel


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    # Split cells by neighbour counts into each splitter cell until equitable.
    while True:
        for s in range(len(cells)):
            splitter = 0
            for v in cells[s]:
                splitter |= 1 << v
            new_cells = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & splitter).bit_count(), []).append(v)
                if len(groups) == 1:
                    new_cells.append(cell)
                else:
                    split = True
                    for key in sorted(groups):
                        new_cells.append(groups[key])
            if split:
                cells = new_cells
                break
        else:
            return cells


def _leaf_code(adj: Sequence[int], order: Sequence[int]) -> int:
    n = len(order)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    code = 0
    for i in range(1, n):
        row = adj[order[i]]
        bits = 0
        for u in iter_bits(row):
            p = pos[u]
            if p < i:
                bits |= 1 << (i - 1 - p)
        code = (code << i) | bits
    return code


def _twin_classes(n: int, adj: Sequence[int]) -> list[int]:
    """Representative of each vertex's twin class (open or closed twins)."""
    rep = list(range(n))
    for v in range(n):
        if rep[v] != v:
            continue
        for u in range(v + 1, n):
            if rep[u] != u:
                continue
            bu, bv = 1 << u, 1 << v
            if (adj[u] & ~bv) == (adj[v] & ~bu):
                rep[u] = v
    return rep


def _orbit_reps(n: int, gens: list[list[int]], prefix: tuple[int, ...]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in gens:
        if any(perm[p] != p for p in prefix):
            continue
        for x in range(n):
            a, b = find(x), find(perm[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(x) for x in range(n)]


def canonical_order(n: int, adj: Sequence[int]) -> tuple[int, list[int]]:
    """Return ``(code, order)``: the canonical code and a labelling attaining it.

    ``order[i]`` is the original vertex placed at canonical position ``i``.
    """
    if n <= 1:
        return 0, list(range(n))
    degree_cells: dict[int, list[int]] = {}
    for v in range(n):
        degree_cells.setdefault(adj[v].bit_count(), []).append(v)
    root = _refine(adj, [degree_cells[d] for d in sorted(degree_cells)])
    twins = _twin_classes(n, adj)
    best_code = -1
    best_order: list[int] = []
    gens: list[list[int]] = []

    def search(cells: list[list[int]], prefix: tuple[int, ...]) -> None:
        nonlocal best_code, best_order
        target = None
        for cell in cells:
            if len(cell) > 1 and (target is None or len(cell) < len(target)):
                target = cell
        if target is None:
            order = [cell[0] for cell in cells]
            code = _leaf_code(adj, order)
            if code > best_code:
                best_code, best_order = code, order
            elif code == best_code:
                # order -> best_order is an automorphism
                perm = [0] * n
                for a, b in zip(order, best_order):
                    perm[a] = b
                gens.append(perm)
            return
        done_twins: set[int] = set()
        tried: list[int] = []
        for v in target:
            if twins[v] in done_twins:
                continue
            if tried:
                reps = _orbit_reps(n, gens, prefix)
                if any(reps[v] == reps[t] for t in tried):
                    continue
            done_twins.add(twins[v])
            tried.append(v)
            child = []
            for cell in cells:
                if cell is target:
                    child.append([v])
                    child.append([u for u in cell if u != v])
                else:
                    child.append(cell)
            search(_refine(adj, child), prefix + (v,))

    search(root, ())
    return best_code, best_order


def canonical_code(g: Graph) -> int:
    return canonical_order(g.n, g.adj)[0]


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_order(g.n, g.adj)[1])


def canonical_form(g: Graph) -> str:
    """graph6 text of the canonical relabelling; equal iff isomorphic."""
    from .formats import to_graph6

    return to_graph6(canonical_graph(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_code(g) == canonical_code(h)
