"""Seeded random graph families used by property runs and the CLI."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph

FAMILIES = ("random-gnp", "planar", "bipartite", "trees")
DEFAULT_SEED = 20240229
DEFAULT_P = 0.5


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_bipartite(n: int, p: float, rng: random.Random) -> Graph:
    side = [rng.random() < 0.5 for _ in range(n)]
    edges = [(u, v) for u, v in combinations(range(n), 2) if side[u] != side[v] and rng.random() < p]
    return Graph.from_edges(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree via a random Pruefer sequence."""
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def random_triangulation(n: int, rng: random.Random, flips: int | None = None) -> set[frozenset[int]]:
    """Faces of a maximal planar graph: stacked triangulation, then random edge flips."""
    faces = [frozenset((0, 1, 2)), frozenset((0, 1, 2))]  # inner and outer face
    for v in range(3, n):
        f = faces.pop(rng.randrange(len(faces)))
        a, b, c = sorted(f)
        faces += [frozenset((a, b, v)), frozenset((b, c, v)), frozenset((a, c, v))]
    adj = {v: set() for v in range(n)}
    for f in faces:
        for u, v in combinations(f, 2):
            adj[u].add(v)
            adj[v].add(u)
    if n < 5:
        return {frozenset(e) for f in faces for e in combinations(f, 2)}
    for _ in range(n if flips is None else flips):
        i, j = rng.sample(range(len(faces)), 2)
        shared = faces[i] & faces[j]
        if len(shared) != 2:
            continue
        (x,) = faces[i] - shared
        (y,) = faces[j] - shared
        if y in adj[x]:
            continue
        u, v = sorted(shared)
        adj[u].discard(v)
        adj[v].discard(u)
        adj[x].add(y)
        adj[y].add(x)
        faces[i] = frozenset((x, y, u))
        faces[j] = frozenset((x, y, v))
    return {frozenset((u, v)) for u in adj for v in adj[u]}


def random_planar(n: int, rng: random.Random) -> Graph:
    """Random triangulation with a random fraction (up to half) of its edges deleted."""
    if n < 3:
        return gnp(n, 0.5, rng)
    edges = sorted(tuple(sorted(e)) for e in random_triangulation(n, rng))
    drop = rng.random() * 0.5
    return Graph.from_edges(n, [e for e in edges if rng.random() >= drop])


def generate_corpus(
    family: str, n: int, count: int, seed: int = DEFAULT_SEED, p: float = DEFAULT_P
) -> list[Graph]:
    """``count`` graphs on ``n`` vertices from ``family``, reproducible from ``seed``."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    if family == "random-gnp":
        return [gnp(n, p, rng) for _ in range(count)]
    if family == "bipartite":
        return [random_bipartite(n, p, rng) for _ in range(count)]
    if family == "trees":
        return [random_tree(n, rng) for _ in range(count)]
    return [random_planar(n, rng) for _ in range(count)]


def mixed_corpus(count: int, max_n: int, seed: int = DEFAULT_SEED) -> list[Graph]:
    """Dense and sparse G(n, p) graphs with sizes cycling through ``1 .. max_n``."""
    rng = random.Random(seed)
    densities = (0.3, 0.5, 0.7, 0.9)
    return [gnp(1 + i % max_n, densities[(i // max_n) % len(densities)], rng) for i in range(count)]


def planar_corpus(count: int, max_n: int, seed: int = DEFAULT_SEED) -> list[Graph]:
    """Planar graphs with sizes cycling through ``4 .. max_n``; a quarter are left maximal."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = 4 + i % (max_n - 3)
        if i % 4 == 0:
            edges = sorted(tuple(sorted(e)) for e in random_triangulation(n, rng))
            out.append(Graph.from_edges(n, edges))
        else:
            out.append(random_planar(n, rng))
    return out
