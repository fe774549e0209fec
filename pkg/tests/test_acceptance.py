"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

All tolerances are exact (integer, boolean or isomorphism equality).
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

import networkx as nx
from cliquereconf.analysis import (
    predicted_ts_omega,
    tj4_structure_check,
    triangle_bounds_check,
    ts_planarity_check,
    verify_chromatic_sandwich,
    verify_diamond_free,
    verify_omega_formula,
    verify_tj_triangle_intersections,
)
from cliquereconf.cliques import clique_number, count_k3, count_k4, enumerate_k_cliques
from cliquereconf.coloring import chromatic_number
from cliquereconf.corpus import DEFAULT_SEED, mixed_corpus, planar_corpus
from cliquereconf.families import fibonacci_cube, gear, hypercube, johnson
from cliquereconf.graph import (
    Graph,
    cartesian_product,
    complement,
    complete_graph,
    cycle_graph,
    join,
    path_graph,
)
from cliquereconf.isomorphism import is_isomorphic
from cliquereconf.properties import is_bipartite, is_median_graph, medians
from cliquereconf.reconf import build_simplex, build_tj, build_ts, token_graph
from cliquereconf.reconstruct import build_msets, partition_neighbors, verify_reconstruction
from oracles import (
    all_graphs,
    chromatic_number_naive,
    k_cliques_naive,
    medians_naive,
    random_graph,
    to_nx,
)

SEED = DEFAULT_SEED


@lru_cache(maxsize=None)
def corpus() -> tuple[Graph, ...]:
    """200 seeded graphs, 1..8 vertices, edge densities 0.3..0.9."""
    return tuple(mixed_corpus(200, 8, seed=SEED))


@lru_cache(maxsize=None)
def planar_graphs() -> tuple[Graph, ...]:
    """100 seeded planar graphs, 4..12 vertices."""
    return tuple(planar_corpus(100, 12, seed=SEED))


@lru_cache(maxsize=None)
def atlas(max_n: int) -> tuple[Graph, ...]:
    """Every graph on at most ``max_n`` vertices, one per isomorphism class."""
    out = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() <= max_n:
            out.append(Graph.from_edges(h.number_of_nodes(), list(h.edges())))
    return tuple(out)


def announce(capsys, number: int, title: str, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\ncriterion {number:2d} [{'PASS' if ok else 'FAIL'}] {title}: {detail} (tolerance: exact)")


def test_criterion_01_omega_formula(capsys):
    checked, bad = 0, []
    for i, g in enumerate(corpus()):
        w = clique_number(g)
        for k in range(1, w + 2):
            r = verify_omega_formula(g, k)
            checked += 1
            # the prediction is recomputed here from the raw clique number as well
            if not r.passed or r.values["actual"] != predicted_ts_omega(w, k):
                bad.append((i, k, r.values))
    named = [
        verify_omega_formula(complete_graph(5), 2).values["actual"] == 4,
        verify_omega_formula(complete_graph(4), 4).values["actual"] == 1,
        verify_omega_formula(cycle_graph(5), 3).values["actual"] == 0,
    ]
    ok = not bad and all(named)
    announce(capsys, 1, "clique number of TS_k matches the three-case formula", ok,
             f"{len(corpus())} graphs, {checked} (g, k) pairs, {len(bad)} mismatches, seed {SEED}")
    assert ok, bad[:5]


def test_criterion_02_johnson_identity(capsys):
    pairs, bad = 0, []
    for n in range(1, 6):
        kn = complete_graph(n)
        for k in range(1, n + 1):
            ts, tok, jn = build_ts(kn, k).graph, token_graph(kn, k).graph, johnson(n, k)
            pairs += 1
            w1, w2 = is_isomorphic(ts, tok), is_isomorphic(ts, jn)
            if w1 is None or w2 is None or not (w1.check(ts, tok) and w2.check(ts, jn)):
                bad.append((n, k))
    ok = not bad
    announce(capsys, 2, "TS_k(K_n) = token graph = J(n,k)", ok, f"{pairs} (n, k) pairs with 1 <= k <= n <= 5")
    assert ok, bad


def test_criterion_03_chromatic_sandwich(capsys):
    graphs = [g for g in corpus() if len(g) <= 7]
    graphs += [complete_graph(n) for n in range(1, 8)] + [cycle_graph(n) for n in range(3, 8)]
    checked, bad = 0, []
    for i, g in enumerate(graphs):
        for k in range(1, 4):
            r = verify_chromatic_sandwich(g, k)
            checked += 1
            if not r.passed:
                bad.append((i, k, r.values))
    # the exact middle value is cross-checked against the naive search on a sample
    sample_ok = all(
        chromatic_number(build_ts(g, k).graph) == chromatic_number_naive(build_ts(g, k).graph)
        for g in graphs[:40] for k in range(1, 4)
    )
    ok = not bad and sample_ok
    announce(capsys, 3, "chromatic number of TS_k lies between two Johnson graph bounds", ok,
             f"{len(graphs)} graphs with |V| <= 7, k in 1..3, {checked} checks, {len(bad)} violations")
    assert ok, bad[:5]


def test_criterion_04_diamond_free_and_triangles(capsys):
    bad = []
    scanned = 0
    for i, g in enumerate(corpus()):
        w = clique_number(g)
        if w == 0:
            continue
        scanned += 1
        t = build_tj(g, w)
        if not verify_diamond_free(g).passed:
            bad.append(("diamond", i))
        if not verify_tj_triangle_intersections(t).passed:
            bad.append(("triangle", i))
        # independent 4-subset scan
        tg = t.graph
        for s in combinations(range(len(tg)), 4):
            if sum(tg.adjacent(u, v) for u, v in combinations(s, 2)) == 5:
                bad.append(("naive-diamond", i, s))
                break
    ok = not bad
    announce(capsys, 4, "TJ at the clique number is diamond-free with equal triangle intersections", ok,
             f"{scanned} corpus graphs, {len(bad)} violations")
    assert ok, bad[:5]


def _reconstruction_cases():
    return [(i, g) for i, g in enumerate(corpus()) if clique_number(g) >= 2]


def test_criterion_05_reconstruction_round_trip(capsys):
    cases = _reconstruction_cases()
    bad = []
    with_isolated = 0
    for i, g in cases:
        r = verify_reconstruction(g)
        if not r.passed:
            bad.append((i, r.witness))
        with_isolated += r.values.get("c", 0) > 0
    ok = not bad
    announce(capsys, 5, "unlabeled maximum-size TJ reconstructs TS one size down, Msets equal reference", ok,
             f"{len(cases)} graphs with omega >= 2 ({with_isolated} with c > 0), {len(bad)} failures")
    assert ok, bad[:3]


def test_criterion_06_msets_invariants(capsys):
    bad = []
    cases = _reconstruction_cases()
    for i, g in cases:
        k = clique_number(g)
        t = build_tj(g, k).stripped()
        m = build_msets(t, k, partition_neighbors(t, k))
        keys = list(m.counts)
        if any(len(s) >= 2 and m.counts[s] != 1 for s in keys):
            bad.append((i, "multiplicity"))
        if any(len(set(a) & set(b)) >= 2 for a, b in combinations(keys, 2)):
            bad.append((i, "distinct sets share two nodes"))
        if any(not all(t.adjacent(u, v) for u, v in combinations(s, 2)) for s in keys):
            bad.append((i, "non-clique member"))
        for v in range(len(t)):
            if sum(c for s, c in m.counts.items() if v in s) != k:
                bad.append((i, "cover count", v))
        for u, v in t.edges():
            if sum(1 for s in keys if u in s and v in s) != 1:
                bad.append((i, "edge cover", (u, v)))
    ok = not bad
    announce(capsys, 6, "Msets: pairwise overlap < 2, cliques, k-fold node cover, unique edge cover", ok,
             f"{len(cases)} Msets outputs, {len(bad)} violations")
    assert ok, bad[:5]


def test_criterion_07_planarity_preserved(capsys):
    bad = []
    for i, g in enumerate(planar_graphs()):
        for k in range(1, 5):
            r = ts_planarity_check(g, k)
            ts = build_ts(g, k).graph
            if not r.passed or not nx.check_planarity(to_nx(ts))[0]:
                bad.append((i, k))
    ok = not bad
    announce(capsys, 7, "TS_k of planar graphs is planar for k = 1..4", ok,
             f"{len(planar_graphs())} planar graphs (|V| 4..12, seed {SEED}), {len(bad)} violations")
    assert ok, bad[:5]


def test_criterion_08_counting_bounds(capsys):
    bad, findings = [], 0
    applicable = {"F3 <= 3|V| - 8": 0, "F3 <= |E| - 2": 0, "2*F4 <= F3 - 2": 0}
    for i, g in enumerate(planar_graphs()):
        r = triangle_bounds_check(g)
        f3, f4 = len(k_cliques_naive(g, 3)), len(k_cliques_naive(g, 4))
        if (r.values["F3"], r.values["F4"]) != (f3, f4) or (count_k3(g), count_k4(g)) != (f3, f4):
            bad.append((i, "counts"))
        if not r.passed:
            bad.append((i, r.values["checks"]))
        for c in r.values["checks"]:
            applicable[c["bound"]] += c["applicable"]
        findings += len(r.values["findings"])
        if len(g) >= 3 and f3 >= 1 and f3 > 3 * len(g) - 8:
            bad.append((i, "F3 <= 3|V| - 8"))
    k4 = triangle_bounds_check(complete_graph(4))
    tight = k4.values["F3"] == 4 == 3 * 4 - 8 and all(c["margin"] == 0 for c in k4.values["checks"])
    ok = not bad and tight
    announce(capsys, 8, "planar triangle counting bounds, K_4 tight", ok,
             f"{len(planar_graphs())} planar graphs, applicable {applicable}, "
             f"{findings} vacuous findings recorded, {len(bad)} violations")
    assert ok, bad[:5]


def test_criterion_09_tj4_structure(capsys):
    bad = []
    for i, g in enumerate(planar_graphs()):
        r = tj4_structure_check(g)
        t = build_tj(g, 4).graph
        h = to_nx(t)
        if not r.passed or (len(t) and not nx.is_forest(h)) or max(t.degrees(), default=0) > 4:
            bad.append((i, r.values))
    ok = not bad
    announce(capsys, 9, "TJ_4 of planar graphs is a forest of max degree <= 4", ok,
             f"{len(planar_graphs())} planar graphs, {len(bad)} violations")
    assert ok, bad[:5]


def test_criterion_10_simplex_graphs(capsys):
    bad = []
    for n in range(0, 6):
        if is_isomorphic(build_simplex(complete_graph(n)).graph, hypercube(n)) is None:
            bad.append(("hypercube", n))
    for n in range(4, 9):
        s = build_simplex(cycle_graph(n)).graph
        if (len(s), s.edge_count) != (2 * n + 1, 3 * n) or is_isomorphic(s, gear(n)) is None:
            bad.append(("gear", n))
    for n in range(1, 9):
        if is_isomorphic(build_simplex(complement(path_graph(n))).graph, fibonacci_cube(n)) is None:
            bad.append(("fibonacci", n))
    small = [g for n in range(0, 4) for g in all_graphs(n)]
    for g in small:
        for h in small:
            lhs = build_simplex(join(g, h)).graph
            rhs = cartesian_product(build_simplex(g).graph, build_simplex(h).graph)
            if is_isomorphic(lhs, rhs) is None:
                bad.append(("join", g.edges(), h.edges()))
    upto6 = atlas(6)
    for g in upto6:
        s = build_simplex(g).graph
        if not (is_median_graph(s) and is_bipartite(s)):
            bad.append(("median", g.edges()))
    ok = not bad
    announce(capsys, 10, "simplex graphs: hypercubes, gears, Fibonacci cubes, joins, median+bipartite", ok,
             f"{len(small) ** 2} join pairs, {len(upto6)} graphs up to isomorphism with |V| <= 6, "
             f"{len(bad)} failures")
    assert ok, bad[:5]


def test_criterion_11_oracle_equivalence(capsys):
    rng = random.Random(SEED)
    graphs = list(atlas(7))
    graphs += [random_graph(rng, 8, p) for p in (0.2, 0.4, 0.6, 0.8) for _ in range(50)]
    bad = []
    triples = 0
    for i, g in enumerate(graphs):
        for k in range(0, len(g) + 1):
            if [c.members for c in enumerate_k_cliques(g, k)] != k_cliques_naive(g, k):
                bad.append(("cliques", i, k))
        if chromatic_number(g) != chromatic_number_naive(g):
            bad.append(("chi", i))
        if g.is_connected() and len(g) >= 3:
            for a, b, c in combinations(range(len(g)), 3):
                triples += 1
                if medians(g, a, b, c) != medians_naive(g, a, b, c):
                    bad.append(("medians", i, (a, b, c)))
                    break
    # labelled, not just up to isomorphism, where that is cheap
    for g in all_graphs(5):
        for k in range(0, 6):
            if [c.members for c in enumerate_k_cliques(g, k)] != k_cliques_naive(g, k):
                bad.append(("labelled cliques", g.edges(), k))
        if chromatic_number(g) != chromatic_number_naive(g, literal=True):
            bad.append(("labelled chi", g.edges()))
    ok = not bad
    announce(capsys, 11, "cliques, chromatic number and medians match exhaustive oracles", ok,
             f"all {len(atlas(7))} graphs with |V| <= 7 up to isomorphism plus 200 seeded 8-vertex graphs "
             f"and all 1024 labelled 5-vertex graphs, "
             f"{triples} median triples, {len(bad)} mismatches")
    assert ok, bad[:5]

