"""Named graph families: Johnson, Kneser, hypercube, gear, Fibonacci cube."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, GraphError


def _subset_name(members: tuple[int, ...]) -> str:
    return "{" + ",".join(map(str, members)) + "}"


def johnson(n: int, k: int) -> Graph:
    """``J(n, k)``: ``k``-subsets of ``range(n)``, adjacent when they share ``k - 1`` elements.

    Vertices follow ``itertools.combinations`` order.
    """
    if not 0 <= k <= n:
        raise GraphError(f"johnson graph needs 0 <= k <= n, got n={n}, k={k}")
    subsets = list(combinations(range(n), k))
    sets = [set(s) for s in subsets]
    edges = [
        (i, j)
        for i in range(len(sets))
        for j in range(i + 1, len(sets))
        if len(sets[i] & sets[j]) == k - 1
    ]
    return Graph.from_edges(len(subsets), edges, [_subset_name(s) for s in subsets])


def kneser(n: int, k: int) -> Graph:
    """``K(n, k)``: ``k``-subsets adjacent when disjoint (``K(5, 2)`` is Petersen)."""
    if not 0 <= k <= n:
        raise GraphError(f"kneser graph needs 0 <= k <= n, got n={n}, k={k}")
    subsets = list(combinations(range(n), k))
    sets = [set(s) for s in subsets]
    edges = [
        (i, j)
        for i in range(len(sets))
        for j in range(i + 1, len(sets))
        if not sets[i] & sets[j]
    ]
    return Graph.from_edges(len(subsets), edges, [_subset_name(s) for s in subsets])


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def hypercube(n: int) -> Graph:
    """``Q_n`` on the integers ``0 .. 2^n - 1``; names are ``n``-bit strings."""
    if n < 0:
        raise GraphError("hypercube dimension must be non-negative")
    size = 1 << n
    edges = [(v, v | (1 << b)) for v in range(size) for b in range(n) if not v >> b & 1]
    names = [format(v, f"0{n}b") if n else "" for v in range(size)]
    return Graph.from_edges(size, edges, names)


def gear(n: int) -> Graph:
    """Gear graph: hub 0, rim cycle ``1 .. 2n``; odd rim vertices carry the spokes."""
    if n < 3:
        raise GraphError("gear graph needs n >= 3")
    rim = 2 * n
    edges = [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    edges += [(0, v) for v in range(1, rim + 1, 2)]
    return Graph.from_edges(rim + 1, edges)


def fibonacci_cube(n: int) -> Graph:
    """``Gamma_n``: subgraph of ``Q_n`` induced by strings with no two consecutive 1s."""
    if n < 0:
        raise GraphError("fibonacci cube dimension must be non-negative")
    words = [v for v in range(1 << n) if not v & (v >> 1)]
    index = {v: i for i, v in enumerate(words)}
    edges = [
        (index[v], index[v | (1 << b)])
        for v in words
        for b in range(n)
        if not v >> b & 1 and (v | (1 << b)) in index
    ]
    names = [format(v, f"0{n}b") if n else "" for v in words]
    return Graph.from_edges(len(words), edges, names)
