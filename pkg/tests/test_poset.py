import json

import jsonschema
import pytest

from codemorph import Code, DomainError, ResourceError
from codemorph.code import canonical_key, is_reduced
from codemorph.covering import covering_map
from codemorph.morphism import drop_trivial_image_neurons, is_bmf
from codemorph.poset import POSET_SCHEMA, downset, enumerate_reduced_codes, export_dot, export_json


@pytest.fixture(scope="module")
def lambda3():
    return downset(enumerate_reduced_codes(3))


def test_enumerate_small():
    assert enumerate_reduced_codes(1) == [Code(1, frozenset({0, 1}))]
    assert len(enumerate_reduced_codes(2)) == 5
    assert len(enumerate_reduced_codes(3)) == 51
    for C in enumerate_reduced_codes(3):
        assert is_reduced(C) and C.n == 3


def test_enumerate_limits():
    with pytest.raises(ResourceError):
        enumerate_reduced_codes(5)
    with pytest.raises(DomainError):
        enumerate_reduced_codes(-1)


def test_lambda3_counts(lambda3):
    G = lambda3
    assert len(G.nodes) == 82
    assert sum(v.lam == 4 for v in G.nodes.values()) == 24
    assert len(G.edges) == 260
    assert sum(e.bmf for e in G.edges) == 50
    assert not G.truncated


def test_nodes_are_consistent(lambda3):
    for key, v in lambda3.nodes.items():
        assert canonical_key(v.code) == key
        assert v.d == v.t - len(v.code) >= 0


def test_edges_follow_trunk_grading(lambda3):
    G = lambda3
    for e in G.edges:
        p, c = G.nodes[e.parent], G.nodes[e.child]
        assert c.t == p.t - 1
        assert p.d - c.d in (0, 1)


def test_bmf_edges_reverified(lambda3):
    G = lambda3
    for e in G.edges:
        C = G.nodes[e.parent].code
        s = covering_map(C, e.neuron)
        assert e.bmf == is_bmf(C, drop_trivial_image_neurons(C, s.raw_rep))


def test_limit_truncates():
    G = downset(enumerate_reduced_codes(3), limit=60)
    assert G.truncated and len(G.nodes) == 60


def test_exports(lambda3, tmp_path):
    text = export_json(lambda3, tmp_path / "g.json")
    data = json.loads((tmp_path / "g.json").read_text())
    assert json.loads(text) == data
    jsonschema.validate(data, POSET_SCHEMA)
    assert len(data["nodes"]) == 82
    dot = export_dot(lambda3, tmp_path / "g.dot")
    assert dot.startswith("digraph") and dot.rstrip().endswith("}")
    assert dot.count("->") == 260
    assert dot.count("style=solid") == 50


def test_export_deterministic():
    a = export_json(downset(enumerate_reduced_codes(2)))
    b = export_json(downset(reversed(enumerate_reduced_codes(2))))
    assert a == b


def test_lambda_growth(lambda3):
    growth, edge = lambda3.lambda_growth()
    assert growth == 1
    assert lambda3.nodes[edge.child].lam - lambda3.nodes[edge.parent].lam == 1
    assert growth <= 2 * 3 - 2
