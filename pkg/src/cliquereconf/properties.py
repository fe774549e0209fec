"""Distance-based and structural predicates: bipartiteness, medians, forests."""

from __future__ import annotations

from .graph import Graph, GraphError, iter_bits


def bfs_layers(g: Graph, source: int) -> list[int]:
    """``layers[d]`` is the bitset of vertices at distance ``d`` from ``source``."""
    seen = frontier = 1 << source
    layers = [frontier]
    while True:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        if not frontier:
            return layers
        seen |= frontier
        layers.append(frontier)


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * len(g)
    for d, layer in enumerate(bfs_layers(g, source)):
        for v in iter_bits(layer):
            dist[v] = d
    return dist


def is_bipartite(g: Graph) -> bool:
    for comp in g.components():
        layers = bfs_layers(g, comp[0])
        # an edge inside a BFS layer closes an odd cycle
        for layer in layers:
            for v in iter_bits(layer):
                if g.rows[v] & layer:
                    return False
    return True


def medians(g: Graph, a: int, b: int, c: int) -> frozenset[int]:
    """Vertices lying on a shortest path between each pair of ``a, b, c``."""
    da, db, dc = bfs_distances(g, a), bfs_distances(g, b), bfs_distances(g, c)
    if db[a] is None or dc[a] is None:
        raise GraphError("medians need a, b, c in the same component")
    out = []
    for m in range(len(g)):
        if da[m] is None:
            continue
        if (
            da[m] + db[m] == da[b]
            and db[m] + dc[m] == db[c]
            and da[m] + dc[m] == da[c]
        ):
            out.append(m)
    return frozenset(out)


def _intervals(g: Graph) -> list[list[int]]:
    n = len(g)
    layers = [bfs_layers(g, s) for s in range(n)]
    dist = [[0] * n for _ in range(n)]
    for s in range(n):
        for d, layer in enumerate(layers[s]):
            for v in iter_bits(layer):
                dist[s][v] = d
    interval = [[0] * n for _ in range(n)]
    for a in range(n):
        la = layers[a]
        for b in range(a, n):
            lb = layers[b]
            d = dist[a][b]
            mask = 0
            for i in range(d + 1):
                mask |= la[i] & lb[d - i]
            interval[a][b] = interval[b][a] = mask
    return interval


def is_median_graph(g: Graph) -> bool:
    """Every triple of vertices has exactly one median.

    Triples are scanned with interval bitsets: the medians of ``a, b, c`` are
    ``I(a,b) & I(b,c) & I(a,c)`` where ``I`` is the geodesic interval.
    """
    n = len(g)
    if n == 0:
        return True
    if not g.is_connected():
        raise GraphError("median-graph test needs a connected graph")
    interval = _intervals(g)
    for a in range(n):
        row_a = interval[a]
        for b in range(a + 1, n):
            ab = row_a[b]
            row_b = interval[b]
            for c in range(b + 1, n):
                if (ab & row_b[c] & row_a[c]).bit_count() != 1:
                    return False
    return True


def is_acyclic(g: Graph) -> bool:
    """True iff ``g`` is a forest."""
    return g.edge_count == len(g) - len(g.components())


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)
