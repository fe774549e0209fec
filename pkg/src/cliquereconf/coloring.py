"""Exact vertex colouring."""

from __future__ import annotations

from . import kernels
from .graph import Graph


def optimal_coloring(g: Graph) -> list[int]:
    """A proper colouring with the minimum number of colours.

    Colours are ``0..chi-1``; vertex ``v`` gets ``result[v]``.  Uses a
    DSATUR-seeded branch and bound with the clique number as lower bound.
    """
    if len(g) == 0:
        return []
    return kernels.exact_coloring(g.rows, kernels.clique_number(g.rows))


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number; ``0`` for the graph with no vertices."""
    coloring = optimal_coloring(g)
    return max(coloring) + 1 if coloring else 0


def is_proper_coloring(g: Graph, coloring: list[int]) -> bool:
    if len(coloring) != len(g):
        return False
    return all(coloring[u] != coloring[v] for u, v in g.edges())
