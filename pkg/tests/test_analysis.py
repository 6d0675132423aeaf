from __future__ import annotations

import random

import jsonschema

from kdense.analysis import analyze, check_propositions
from kdense.constructions import c4_torus, cut_vertex_cliques
from kdense.graph import complete_graph, delete_edge, disjoint_union, empty_graph, octahedron, path_graph

from conftest import random_graph


def _by_id(results):
    return {r.id: r for r in results}


def test_two_k5_at_cut_vertex():
    res = _by_id(check_propositions(cut_vertex_cliques(5).graph))
    assert all(r.passed for r in res.values())
    assert res["2.5"].witness["edge_connectivity"] == 4


def test_complete_graphs_pass():
    for n in range(1, 8):
        assert all(r.passed for r in check_propositions(complete_graph(n)))


def test_torus_is_highly_connected_but_only_2_dense():
    g = c4_torus(2).graph
    res = _by_id(check_propositions(g))
    assert all(r.passed for r in res.values())
    assert res["2.5"].witness == {"edge_connectivity": 4, "k": 2}


def test_deletion_skips_recorded():
    # deleting the centre of a path P_3 isolates both ends
    res = _by_id(check_propositions(path_graph(3)))
    assert res["2.3"].passed and res["2.3"].skipped == [1]


def test_undefined_index():
    res = check_propositions(disjoint_union(complete_graph(3), empty_graph(1)))
    assert all(r.passed for r in res)


def test_report_schema_and_values(schemas):
    rep = analyze(octahedron())
    jsonschema.validate(rep, schemas["analyze"])
    assert rep["k_star"] == 4 and rep["hierarchy"]["omega"] == 3
    assert rep["multiplicity_histogram"] == {"2": 12}
    rep = analyze(complete_graph(3))
    assert rep["k_star"] == 3 and rep["communities_per_k"] == {"2": [[0, 1, 2]], "3": [[0, 1, 2]]}
    rep = analyze(empty_graph(0))
    jsonschema.validate(rep, schemas["analyze"])
    assert rep["k_star"] is None


def test_random_reports_validate(schemas):
    rng = random.Random(21)
    for _ in range(30):
        g = random_graph(rng, rng.randint(0, 10))
        jsonschema.validate(analyze(g), schemas["analyze"])


def test_kn_minus_e():
    rep = analyze(delete_edge(complete_graph(6), 0, 1))
    assert rep["k_star"] == 5 and rep["hierarchy"] == {"omega": 5, "core": 5}
