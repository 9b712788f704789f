import json

import pytest
from hypothesis import given, settings

from hyperinterlace.campaign import instances
from hyperinterlace.document import digest, load, parse_hypergraph, serialize_hypergraph, to_document
from hyperinterlace.exceptions import DocumentError

from .conftest import FIXTURES, hypergraphs

FIXTURE_FILES = sorted(FIXTURES.glob("*.json"))


def test_parse_example():
    G = load(FIXTURES / "hyperedge_loop.json")
    assert G.n == 3 and G.m == 2
    assert all(c == 1.0 for e in G.edges for _, c in e.coefficients)
    assert G.edge("l").as_dict() == {"v1": 1.0}


@pytest.mark.parametrize("path", FIXTURE_FILES, ids=lambda p: p.name)
def test_fixture_round_trip(path):
    G = load(path)
    assert parse_hypergraph(serialize_hypergraph(G)) == G


@pytest.mark.parametrize(
    "text, fragment",
    [
        ('{"vertices": ["v1"], "edges": [{"id": "e", "coefficients": {"v1": 0}}]}', "zero coefficient"),
        ('{"vertices": ["v1"], "edges": [{"id": "e", "coefficients": {"v2": 1}}]}', "unknown vertex"),
        ('{"vertices": ["v1"], "edges": [{"id": "e", "coefficients": {}}, {"id": "e", "coefficients": {}}]}',
         "duplicate edge"),
        ('{"vertices": ["v1", "v1"], "edges": []}', "duplicate vertex"),
        ('{"vertices": ["v1"], "edges": [{"id": "e", "coefficients": {"v1": 1, "v1": 2}}]}', "duplicate key"),
        ('{"vertices": ["v1"], "edges": [{"id": "e", "coefficients": {"v1": true}}]}', "not a number"),
        ('{"vertices": ["v1"], "edges": [{"id": "e", "coefficients": {"v1": "1"}}]}', "not a number"),
        ('{"vertices": "v1"}', "list of strings"),
        ('{"vertices": [], "extra": 1}', "expected an object"),
        ('[1, 2]', "expected an object"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(DocumentError, match=fragment):
        parse_hypergraph(text)


def test_syntax_error_position():
    with pytest.raises(DocumentError, match=r"line 2, column \d+"):
        parse_hypergraph('{"vertices": [],\n  "edges": [,]}')


def test_exact_decimal_coefficients():
    G = parse_hypergraph('{"vertices": ["a"], "edges": [{"id": "e", "coefficients": {"a": 0.1}}]}')
    assert G.edge("e").coefficient("a") == 0.1
    assert json.loads(serialize_hypergraph(G))["edges"][0]["coefficients"]["a"] == 0.1


def test_digest_is_stable():
    G = load(FIXTURES / "triangle.json")
    assert digest(G) == digest(parse_hypergraph(serialize_hypergraph(G, indent=None)))
    assert digest(G) != digest(load(FIXTURES / "hyperedge_loop.json"))


def test_missing_edges_key_is_empty():
    assert parse_hypergraph('{"vertices": ["a"]}').m == 0


@given(hypergraphs(no_isolated=False))
def test_round_trip_property(G):
    assert parse_hypergraph(serialize_hypergraph(G)) == G
    assert to_document(parse_hypergraph(json.dumps(to_document(G)))) == to_document(G)


def test_round_trip_campaign_instances():
    for _, G in instances(seed=11, count=1000):
        assert parse_hypergraph(serialize_hypergraph(G)) == G
