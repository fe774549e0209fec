import random

import pytest
from hypothesis import given

from cliquereconf.cliques import (
    Clique,
    all_cliques,
    clique_number,
    count_k3,
    count_k4,
    enumerate_k_cliques,
    is_clique,
    maximal_cliques,
)
from cliquereconf.families import petersen
from cliquereconf.graph import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    diamond_graph,
    path_graph,
)
from cliquereconf.reconf import build_simplex
from oracles import clique_number_naive, graphs, k_cliques_naive, maximal_cliques_naive, random_graph

K5_MINUS_E = Graph.from_edges(5, [(u, v) for u in range(5) for v in range(u + 1, 5) if (u, v) != (0, 1)])
OCTAHEDRON = Graph.from_edges(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if v != u + 3])


def test_clique_construction_checks():
    with pytest.raises(GraphError):
        Clique((2, 1))
    with pytest.raises(GraphError):
        Clique.of(path_graph(3), [0, 2])
    c = Clique.of(complete_graph(4), [3, 0, 2])
    assert c.members == (0, 2, 3) and len(c) == 3 and 2 in c
    assert Clique.from_mask(c.mask) == c


def test_enumerate_examples(backend):
    assert len(enumerate_k_cliques(complete_graph(4), 3)) == 4
    assert [c.members for c in enumerate_k_cliques(cycle_graph(5), 2)] == cycle_graph(5).edges()
    assert len(enumerate_k_cliques(K5_MINUS_E, 4)) == 2
    assert enumerate_k_cliques(cycle_graph(5), 0) == [Clique()]
    assert enumerate_k_cliques(cycle_graph(5), 3) == []


def test_enumerate_matches_subsets(backend):
    rng = random.Random(5)
    for _ in range(120):
        g = random_graph(rng, rng.randrange(0, 11), rng.random())
        for k in range(len(g) + 2):
            got = [c.members for c in enumerate_k_cliques(g, k)]
            assert got == k_cliques_naive(g, k)


def test_maximal_examples(backend):
    assert [c.members for c in maximal_cliques(complete_graph(4))] == [(0, 1, 2, 3)]
    assert [c.members for c in maximal_cliques(path_graph(3))] == [(0, 1), (1, 2)]
    assert [c.members for c in maximal_cliques(diamond_graph())] == [(0, 1, 2), (1, 2, 3)]


@given(graphs(9))
def test_maximal_cliques_are_maximal_and_complete(g):
    found = sorted(c.members for c in maximal_cliques(g))
    assert found == maximal_cliques_naive(g)
    for c in found:
        assert is_clique(g, c)
        common = ~0
        for v in c:
            common &= g.rows[v]
        assert not common & ((1 << len(g)) - 1)


def test_clique_number_examples(backend):
    assert clique_number(complete_graph(6)) == 6
    assert clique_number(cycle_graph(5)) == 2
    assert clique_number(petersen()) == 2
    assert clique_number(Graph(())) == 0


@given(graphs(9))
def test_clique_number_is_largest_nonempty_layer(g):
    w = clique_number(g)
    assert w == clique_number_naive(g)
    assert enumerate_k_cliques(g, w) and not enumerate_k_cliques(g, w + 1)


def test_counts():
    assert (count_k3(complete_graph(4)), count_k4(complete_graph(4))) == (4, 1)
    assert count_k3(cycle_graph(6)) == 0
    assert (count_k3(OCTAHEDRON), count_k4(OCTAHEDRON)) == (8, 0)


@given(graphs(7))
def test_all_cliques_count_matches_simplex_nodes(g):
    assert len(all_cliques(g)) == len(build_simplex(g))
