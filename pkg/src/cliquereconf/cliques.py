"""Clique enumeration: fixed-size cliques, maximal cliques, clique number."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import kernels
from .graph import Graph, GraphError, bits_to_tuple, tuple_to_bits


@dataclass(frozen=True, order=True)
class Clique:
    """A strictly sorted vertex set.  ``Clique()`` is the empty clique.

    Use :meth:`of` to build one checked against a host graph; the bare
    constructor only checks ordering.
    """

    members: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        m = self.members
        for a, b in zip(m, m[1:]):
            if a >= b:
                raise GraphError(f"clique members must be strictly increasing: {m}")

    @classmethod
    def of(cls, g: Graph, members: Iterable[int]) -> Clique:
        ordered = tuple(sorted(set(members)))
        for i, u in enumerate(ordered):
            if not 0 <= u < len(g):
                raise GraphError(f"vertex {u} is not in the graph")
            for v in ordered[i + 1 :]:
                if not g.adjacent(u, v):
                    raise GraphError(f"{g.name(u)} and {g.name(v)} are not adjacent")
        return cls(ordered)

    @classmethod
    def from_mask(cls, mask: int) -> Clique:
        return cls(bits_to_tuple(mask))

    @property
    def mask(self) -> int:
        return tuple_to_bits(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def names(self, g: Graph) -> list[str]:
        return [g.name(v) for v in self.members]


def is_clique(g: Graph, members: Iterable[int]) -> bool:
    mask = tuple_to_bits(members)
    rest = mask
    while rest:
        low = rest & -rest
        rest ^= low
        v = low.bit_length() - 1
        if (mask & ~low) & ~g.rows[v]:
            return False
    return True


def k_clique_masks(g: Graph, k: int) -> list[int]:
    if k < 0:
        raise ValueError("k must be non-negative")
    return kernels.k_cliques(g.rows, k)


def enumerate_k_cliques(g: Graph, k: int) -> list[Clique]:
    """Every ``k``-clique exactly once, in lexicographic order.

    ``k = 0`` gives the single empty clique.
    """
    return [Clique.from_mask(m) for m in k_clique_masks(g, k)]


def all_cliques(g: Graph) -> list[Clique]:
    """All cliques including the empty one, ordered by size then lexicographically."""
    out = []
    k = 0
    while True:
        layer = enumerate_k_cliques(g, k)
        if not layer:
            return out
        out.extend(layer)
        k += 1


def maximal_cliques(g: Graph) -> list[Clique]:
    """Maximal cliques (Bron-Kerbosch with pivoting), sorted lexicographically."""
    return sorted(Clique.from_mask(m) for m in kernels.maximal_cliques(g.rows))


def clique_number(g: Graph) -> int:
    return kernels.clique_number(g.rows)


def count_k_cliques(g: Graph, k: int) -> int:
    if k < 0:
        raise ValueError("k must be non-negative")
    return kernels.count_k_cliques(g.rows, k)


def count_k3(g: Graph) -> int:
    return count_k_cliques(g, 3)


def count_k4(g: Graph) -> int:
    return count_k_cliques(g, 4)
