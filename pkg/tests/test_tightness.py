import itertools

import numpy as np
import pytest

from hyperinterlace.hypergraph import GeneratorParams, classify, delete_edges
from hyperinterlace.operators import normalized_laplacian
from hyperinterlace.tightness import (
    random_connected_simple_graphs,
    random_hypergraphs,
    simple_graph,
    tightness_search,
)


def test_example_is_edgeset_witness(hyperedge_loop):
    (w,) = tightness_search([hyperedge_loop], "edgeset_L_strictness", budget=1)
    assert w.edges == ("l",) and w.k == 2 and w.side == "lower"
    assert w.value == pytest.approx(0.0, abs=1e-12)
    assert w.bound == pytest.approx((3 - 5**0.5) / 2)


def test_triangle_is_butler_witness(triangle):
    witnesses = tightness_search([triangle], "butler_strictness", budget=1)
    assert {w.edges for w in witnesses} == {("e12",), ("e13",), ("e23",)}
    w = witnesses[0]
    assert w.k == 2 and w.value == pytest.approx(1.0) and w.bound == pytest.approx(1.5)


def test_edgeset_witness_values_match_oracle():
    G = simple_graph(4, itertools.combinations(range(4), 2))
    for w in tightness_search([G], "edgeset_L_strictness", budget=1):
        H = delete_edges(G, set(w.edges))
        lam = np.linalg.eigvalsh(normalized_laplacian(H))
        assert lam[w.k - 1] == pytest.approx(w.value, abs=1e-10)


def test_budget_and_cap(triangle):
    assert tightness_search(itertools.repeat(triangle), "butler_strictness", budget=5, max_witnesses=2)
    assert len(tightness_search([triangle] * 3, "butler_strictness", budget=3, max_witnesses=4)) == 4
    with pytest.raises(ValueError):
        tightness_search([triangle], "butler_strictness", budget=0)
    with pytest.raises(ValueError):
        tightness_search([triangle], "nope", budget=1)


def test_single_edge_graph_is_skipped():
    # deleting the only edge isolates both vertices
    G = simple_graph(2, [(0, 1)])
    assert tightness_search([G], "butler_strictness", budget=1) == []


def test_random_simple_graphs_are_connected_and_distinct():
    graphs = list(itertools.islice(random_connected_simple_graphs(max_vertices=6, seed=3), 300))
    keys = {(G.n, tuple(sorted(tuple(v for v, _ in e.coefficients) for e in G.edges))) for G in graphs}
    assert len(keys) == len(graphs)
    for G in graphs:
        assert 2 <= G.n <= 6 and classify(G).simple_graph
        # connected: the Kirchhoff Laplacian has a one-dimensional kernel
        K = np.zeros((G.n, G.n))
        for e in G.edges:
            (a, _), (b, _) = e.coefficients
            i, j = G.vertex_index(a), G.vertex_index(b)
            K[i, i] += 1; K[j, j] += 1; K[i, j] -= 1; K[j, i] -= 1
        assert np.sum(np.linalg.eigvalsh(K) < 1e-9) == 1


def test_random_graph_stream_exhausts():
    graphs = list(random_connected_simple_graphs(max_vertices=3, seed=0, patience=200))
    # connected labelled graphs on 2 or 3 vertices: 1 + 4
    assert len(graphs) == 5


def test_random_hypergraphs_are_seeded():
    p = GeneratorParams(seed=10)
    a = list(itertools.islice(random_hypergraphs(p), 3))
    b = list(itertools.islice(random_hypergraphs(p), 3))
    assert a == b and a[0] != a[1]


def test_witness_serializes(triangle):
    (w,) = tightness_search([triangle], "butler_strictness", budget=1, max_witnesses=1)
    d = w.as_dict()
    assert d["target"] == "butler_strictness" and d["document"]["vertices"] == ["v1", "v2", "v3"]
    assert "lambda_2" in w.describe()
