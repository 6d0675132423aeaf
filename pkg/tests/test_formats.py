from __future__ import annotations

import networkx as nx
import pytest

from kdense.enumerate import SearchConstraints, enumerate_graphs
from kdense.formats import from_graph6, parse_edge_list, parse_graph, to_edge_list, to_graph6
from kdense.graph import GraphError, complete_graph, empty_graph, from_edge_list, path_graph

from conftest import random_graph, to_nx


def test_hand_encoded_values():
    # K_3: size byte 3+63='B', bits 111 padded to 111000 -> 56+63 = 'w'
    assert to_graph6(complete_graph(3)) == "Bw"
    assert to_graph6(empty_graph(1)) == "@"
    assert to_graph6(empty_graph(0)) == "?"


def test_round_trip_exhaustive():
    for n in range(0, 8):
        for g in enumerate_graphs(SearchConstraints(n, connected=False)).graphs:
            assert from_graph6(to_graph6(g)) == g
    # n = 8 through the connected classes only, to keep the test quick
    for g in enumerate_graphs(SearchConstraints(8)).graphs:
        assert from_graph6(to_graph6(g)) == g


def test_matches_networkx_encoder():
    import random

    rng = random.Random(7)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 70))
        ours = to_graph6(g)
        theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert ours == theirs


def test_large_size_prefix_and_header():
    g = path_graph(100)
    text = to_graph6(g)
    assert text.startswith("~")
    assert from_graph6(">>graph6<<" + text) == g


@pytest.mark.parametrize("bad", ["", "B", "Bww", "B\x7f", "Bx"])
def test_bad_graph6_rejected(bad):
    with pytest.raises(GraphError):
        from_graph6(bad)


def test_edge_list_round_trip_and_duplicates():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    assert parse_edge_list(to_edge_list(g))[0] == g
    text = "# comment\n4 3\n0 1\n1 0\n2 3\n"
    h, dups = parse_edge_list(text)
    assert h == g and dups == 1


@pytest.mark.parametrize("bad", ["3 1\n0 0\n", "2 1\n0 5\n", "3 2\n0 1\n", "x y\n"])
def test_bad_edge_lists_rejected(bad):
    with pytest.raises(GraphError):
        parse_edge_list(bad)


def test_auto_detection():
    assert parse_graph("Bw\n") == complete_graph(3)
    assert parse_graph("3 3\n0 1\n1 2\n0 2\n") == complete_graph(3)
