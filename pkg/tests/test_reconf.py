import json
import random

import pytest
from hypothesis import given

from cliquereconf.cliques import Clique, enumerate_k_cliques
from cliquereconf.families import hypercube, johnson
from cliquereconf.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    diamond_graph,
    disjoint_union,
    path_graph,
)
from cliquereconf.isomorphism import is_isomorphic
from cliquereconf.reconf import (
    Rule,
    RuleTag,
    build,
    build_simplex,
    build_tar_lower,
    build_tar_upper,
    build_tj,
    build_ts,
    token_graph,
)
from oracles import graphs, random_graph, reconf_edges_naive


def edge_sets(t):
    return {frozenset((frozenset(t.labels[u]), frozenset(t.labels[v]))) for u, v in t.graph.edges()}


def test_rule_threshold_rules():
    Rule(RuleTag.TS)
    Rule(RuleTag.TAR_LOWER, 2)
    with pytest.raises(ValueError):
        Rule(RuleTag.TS, 1)
    with pytest.raises(ValueError):
        Rule(RuleTag.TAR_UPPER)
    assert str(Rule(RuleTag.TAR_UPPER, 3)) == "TAR_upper(3)"


def test_ts_examples():
    t = build_ts(complete_graph(3), 2)
    assert t.graph == complete_graph(3)
    assert [c.members for c in t.labels] == [(0, 1), (0, 2), (1, 2)]
    t = build_ts(complete_graph(4), 2)
    assert (len(t), t.graph.edge_count) == (6, 12)
    assert is_isomorphic(t.graph, johnson(4, 2))
    # two triangles glued at {b,c}
    t = build_ts(diamond_graph(), 2)
    bc = t.index_of(Clique((1, 2)))
    assert t.graph.degree(bc) == 4 and t.graph.edge_count == 6


def test_tj_examples():
    t = build_tj(diamond_graph(), 3)
    assert [c.members for c in t.labels] == [(0, 1, 2), (1, 2, 3)]
    assert t.graph.edges() == [(0, 1)]
    assert len(build_tj(complete_graph(4), 4)) == 1
    two = disjoint_union(complete_graph(3), complete_graph(3))
    t = build_tj(two, 3)
    assert len(t) == 2 and t.graph.edge_count == 0


def test_k_zero_rejected():
    with pytest.raises(ValueError):
        build_ts(complete_graph(2), 0)
    with pytest.raises(ValueError):
        build_tj(complete_graph(2), 0)


@given(graphs(8))
def test_edges_match_move_definitions(g):
    for k in range(1, 5):
        for sliding, builder in ((True, build_ts), (False, build_tj)):
            t = builder(g, k)
            nodes, edges = reconf_edges_naive(g, k, sliding)
            assert [frozenset(c) for c in t.labels] == nodes
            assert edge_sets(t) == edges


@given(graphs(8))
def test_ts_is_a_subgraph_of_tj(g):
    for k in range(1, 4):
        ts, tj = build_ts(g, k), build_tj(g, k)
        assert ts.labels == tj.labels
        assert set(ts.graph.edges()) <= set(tj.graph.edges())


def test_simplex_examples():
    s = build_simplex(complete_graph(2))
    assert [c.members for c in s.labels] == [(), (0,), (1,), (0, 1)]
    assert s.graph.edge_count == 4
    assert is_isomorphic(s.graph, hypercube(2))
    s = build_simplex(cycle_graph(5))
    assert (len(s), s.graph.edge_count) == (11, 15)
    up = build_tar_upper(complete_graph(3), 1)
    assert up.graph.edges() == [(0, 1), (0, 2), (0, 3)]


@given(graphs(7))
def test_tar_edges_change_size_by_one(g):
    for t in (build_simplex(g), build_tar_lower(g, 1), build_tar_upper(g, 2)):
        for u, v in t.graph.edges():
            a, b = set(t.labels[u]), set(t.labels[v])
            assert len(a ^ b) == 1
    assert all(len(c) >= 2 for c in build_tar_lower(g, 2).labels)
    assert all(len(c) <= 1 for c in build_tar_upper(g, 1).labels)


def test_token_graph_examples():
    t = token_graph(path_graph(3), 2)
    assert is_isomorphic(t.graph, path_graph(3))
    assert len(token_graph(cycle_graph(5), 5)) == 1
    for n in range(1, 6):
        for k in range(1, n + 1):
            assert is_isomorphic(token_graph(complete_graph(n), k).graph, build_ts(complete_graph(n), k).graph)
    with pytest.raises(ValueError):
        token_graph(path_graph(3), 4)


def test_labels_follow_enumeration_order():
    rng = random.Random(3)
    g = random_graph(rng, 8, 0.6)
    for k in range(1, 4):
        assert list(build_ts(g, k).labels) == enumerate_k_cliques(g, k)


def test_json_is_deterministic():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], list("abcd"))
    text = build_ts(g, 2).to_json()
    assert text == build_ts(g, 2).to_json()
    doc = json.loads(text)
    assert doc["rule"] == "TS" and doc["k"] == 2
    assert doc["nodes"][0] == ["a", "b"]
    assert doc["edges"] == sorted(doc["edges"]) and all(i < j for i, j in doc["edges"])
    assert len(doc["nodes"]) == 6 and len(doc["edges"]) == 12


def test_build_dispatch():
    g = complete_graph(3)
    assert build(g, "simplex", None).rule.tag is RuleTag.TAR_LOWER
    assert build(g, "tar-upper", 1).rule == Rule(RuleTag.TAR_UPPER, 1)
    with pytest.raises(ValueError):
        build(g, "ts", None)
    with pytest.raises(ValueError):
        build(g, "bogus", 1)
