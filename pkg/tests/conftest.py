from __future__ import annotations

import json
import random
from importlib import resources

import networkx as nx
import pytest

from kdense.graph import Graph, from_edge_list


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def assert_valid(g: Graph) -> None:
    # independent validator: symmetric, loop-free, in range
    for v, row in enumerate(g.adj):
        assert not row >> v & 1
        assert row >> g.n == 0
        for u in range(g.n):
            assert (row >> u & 1) == (g.adj[u] >> v & 1)


@pytest.fixture(scope="session")
def schemas() -> dict:
    out = {}
    for entry in resources.files("kdense").joinpath("schemas").iterdir():
        if entry.name.endswith(".json"):
            out[entry.name[:-5]] = json.loads(entry.read_text())
    return out
