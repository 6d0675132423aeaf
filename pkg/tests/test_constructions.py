from __future__ import annotations

from math import comb

import pytest

from kdense.canon import are_isomorphic, canonical_form
from kdense.constructions import (
    RECIPES,
    CertificateError,
    RealizationError,
    build_recipe,
    c4_torus,
    clique_chain,
    complement_construction,
    conjecture_value,
    cut_vertex_cliques,
    disconnected_min_family,
    glued_cliques,
    max_edge_construction,
    min_edge_construction,
    min_edge_formula,
    min_edges_closed_form,
    octahedron_witness,
    realization,
    special_examples,
    upper_bound_comparison,
    verify_certificate,
    Certificate,
)
from kdense.density import density_index, edge_multiplicity
from kdense.graph import (
    complete_graph,
    connected_components,
    copies,
    delete_edge,
    identify_vertices,
    is_connected,
    join,
)
from kdense.structure import clique_number, edge_connectivity, vertex_connectivity


def _shape(w):
    g = w.graph
    return g.n, g.m, density_index(g)


def test_glued_examples():
    assert _shape(glued_cliques(5, 2)) == (7, 17, 5)
    assert are_isomorphic(glued_cliques(5, 2).graph, join(complete_graph(3), copies(complete_graph(2), 2)))
    assert glued_cliques(4, 0).graph == complete_graph(4)
    kme = delete_edge(complete_graph(6), 0, 1)
    assert canonical_form(glued_cliques(5, 1).graph) == canonical_form(kme)
    with pytest.raises(ValueError):
        glued_cliques(4, 4)


def test_glued_counts_all_small():
    for k in range(2, 10):
        for r in range(k):
            g = glued_cliques(k, r).graph
            assert g.m == comb(k, 2) + comb(r, 2) + r * (k - r)
            assert density_index(g) == k


def test_disconnected_family_examples():
    w = disconnected_min_family(4, 8)
    assert w.graph == copies(complete_graph(4), 2) and w.graph.m == 12
    w = disconnected_min_family(5, 12)
    assert _shape(w) == (12, 27, 5) and len(connected_components(w.graph)) == 2
    w = disconnected_min_family(3, 7)
    assert _shape(w) == (7, 8, 3)


def test_clique_chain_examples():
    w = clique_chain(3, 7)
    f3, _ = identify_vertices([(complete_graph(3), 0)] * 3)
    assert _shape(w) == (7, 9, 3) and are_isomorphic(w.graph, f3)
    w = clique_chain(4, 7)
    two, _ = identify_vertices([(complete_graph(4), 0)] * 2)
    assert _shape(w) == (7, 12, 4) and are_isomorphic(w.graph, two)
    assert _shape(clique_chain(5, 9)) == (9, 20, 5)
    assert clique_chain(4, 10).graph.m == 18
    for k in range(2, 10):
        for n in range(k, 20):
            w = clique_chain(k, n)
            assert w.graph.degree(0) == n - 1


def test_min_edge_examples():
    w = min_edge_construction(2, 9)
    assert w.graph.m == 8 and is_connected(w.graph)
    assert min_edge_construction(3, 6).graph.m == 8
    w = min_edge_construction(4, 6)
    assert w.graph.m == 11 and are_isomorphic(w.graph, join(complete_graph(2), copies(complete_graph(2), 2)))
    with pytest.raises(ValueError):
        min_edge_construction(5, 9)


def test_min_edge_witness_edges():
    for n in range(3, 16):
        w = min_edge_construction(3, n)
        g, u1, u2 = w.graph, w.extra["u1"], w.extra["u2"]
        assert g.adj[u1] & g.adj[u2] == 1 << w.extra["w"]
        assert g.degree(w.extra["w"]) == n - 1
        assert edge_multiplicity(g, u1, u2) == 1
    for n in range(4, 16):
        w = min_edge_construction(4, n)
        assert w.graph.m == min_edges_closed_form(4, n)
        assert w.graph.degree(0) == n - 1


def test_formula_values():
    assert min_edge_formula(4, 7).value == 12 and min_edge_formula(4, 7).status == "proven"
    assert min_edge_formula(3, 5).value == 6
    f = min_edge_formula(5, 9)
    assert (f.value, f.status) == (20, "conjecture")
    assert min_edge_formula(8, 12).status == "upper-bound-only"
    for n in range(7, 40):
        assert min_edges_closed_form(4, n - 3) == min_edges_closed_form(4, n) - 6
    # the clique-chain count reproduces the proven forms for k <= 4
    for k in (2, 3, 4):
        for n in range(k, 30):
            assert conjecture_value(k, n) == min_edges_closed_form(k, n)
    for k in range(2, 12):
        assert conjecture_value(k, k) == comb(k, 2)
    with pytest.raises(ValueError):
        min_edge_formula(5, 4)


def test_complement_examples():
    assert _shape(complement_construction(23, 26)) == (26, 311, 23)
    assert _shape(complement_construction(24, 26)) == (26, 312, 24)
    assert _shape(complement_construction(4, 8)) == (8, 20, 4)
    with pytest.raises(ValueError):
        complement_construction(5, 6)


def test_max_edge_examples():
    assert _shape(max_edge_construction(3, 6)) == (6, 12, 3)
    assert max_edge_construction(5, 5).graph == complete_graph(5)
    assert _shape(max_edge_construction(4, 7)) == (7, 18, 4)
    w = max_edge_construction(4, 10)
    part = w.extra["partition"]
    assert (len(part["A"]), len(part["B"]), len(part["C"])) == (3, 2, 3)


def test_max_edge_counts_up_to_12():
    for k in range(2, 13):
        for n in range(k, 13):
            g = max_edge_construction(k, n).graph
            expect = comb(k, 2) if n == k else n + k - 3 + comb(n - 2, 2)
            assert g.m == expect and density_index(g) == k and is_connected(g)


def test_realization_examples():
    assert _shape(realization(2, 5, 7)) == (5, 7, 2)
    f3, _ = identify_vertices([(complete_graph(3), 0)] * 3)
    assert realization(3, 7, 9).graph == clique_chain(3, 7).graph
    assert are_isomorphic(realization(3, 7, 9).graph, f3)
    assert _shape(realization(4, 7, 15)) == (7, 15, 4)
    with pytest.raises(ValueError):
        realization(3, 7, 20)
    with pytest.raises(ValueError):
        realization(4, 7, 11)


def test_realization_deterministic():
    for k, n, a in [(2, 8, 12), (3, 9, 20), (4, 9, 23)]:
        assert realization(k, n, a).graph.edges() == realization(k, n, a).graph.edges()


def test_realization_sweep_up_to_9():
    # every count in [e, E] except (4, 7, 13), which no graph attains
    unreachable = {(4, 7, 13)}
    for k in (2, 3, 4):
        for n in range(k, 10):
            lo = min_edges_closed_form(k, n)
            hi = max_edge_construction(k, n).graph.m
            for a in range(lo, hi + 1):
                if (k, n, a) in unreachable:
                    with pytest.raises(RealizationError):
                        realization(k, n, a)
                    continue
                w = realization(k, n, a)
                assert _shape(w) == (n, a, k) and is_connected(w.graph)


def test_realization_reaches_larger_n():
    # k = 2 and 3 are complete; for k = 4 only 2n - 1 with n = 1 mod 3 is missing
    for n in range(10, 15):
        for k in (2, 3, 4):
            lo, hi = min_edges_closed_form(k, n), max_edge_construction(k, n).graph.m
            for a in range(lo, hi + 1):
                if k == 4 and n % 3 == 1 and a == 2 * n - 1:
                    continue
                assert realization(k, n, a).graph.m == a


def test_special_examples():
    names = [w.name for w in special_examples()]
    assert names.count("c4-torus") == 3 and names.count("cut-vertex-cliques") == 5
    for a in (1, 2, 3):
        g = c4_torus(a).graph
        assert density_index(g) == 2
        assert vertex_connectivity(g) == 2 * a and edge_connectivity(g) == 2 * a
    for k in range(3, 8):
        g = cut_vertex_cliques(k).graph
        assert density_index(g) == k and vertex_connectivity(g) == 1
    g = octahedron_witness().graph
    assert density_index(g) == 4 and clique_number(g) == 3


def test_certificate_mismatch_raises():
    with pytest.raises(CertificateError):
        verify_certificate(complete_graph(4), Certificate(4, 6, 3, True))


def test_upper_bound_comparison():
    assert upper_bound_comparison(23, 26)["clique_chain"] == 316
    assert upper_bound_comparison(24, 26)["clique_chain"] == 321
    assert upper_bound_comparison(24, 26)["complement"] == 312


def test_recipe_catalogue():
    for name in RECIPES:
        params = {"k": 4, "n": 8, "r": 2, "a": 16, "copies": 2}
        w = build_recipe(name, **params)
        assert w.graph.n > 0
    with pytest.raises(ValueError):
        build_recipe("clique-chain", k=4)
