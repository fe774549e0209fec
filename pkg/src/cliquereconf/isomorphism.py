"""Graph isomorphism by colour refinement plus backtracking."""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .graph import Graph, disjoint_union, iter_bits

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


@dataclass(frozen=True)
class IsoWitness:
    """``mapping[u]`` is the image in ``h`` of vertex ``u`` of ``g``."""

    mapping: tuple[int, ...]

    def check(self, g: Graph, h: Graph) -> bool:
        f = self.mapping
        if len(g) != len(h) or len(f) != len(g) or sorted(f) != list(range(len(h))):
            return False
        if g.edge_count != h.edge_count:
            return False
        return all(h.adjacent(f[u], f[v]) for u, v in g.edges())


def refine_colors(g: Graph) -> list[int]:
    """Stable colouring by iterated neighbour-colour multisets (1-WL).

    Colour ids are canonical: two graphs refined together inside a disjoint
    union get directly comparable colours.
    """
    n = len(g)
    colors = g.degrees()
    count = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in iter_bits(g.rows[v]))))
            for v in range(n)
        ]
        ids = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [ids[s] for s in sigs]
        if len(ids) == count:
            return colors
        count = len(ids)


def _search_order(g: Graph, colors: list[int]) -> list[int]:
    """Greedy order: rarest colour class first, then most already-placed neighbours.

    Remaining ties go by (degree, sorted neighbour degrees, index).
    """
    n = len(g)
    deg = g.degrees()
    class_size: dict[int, int] = {}
    for c in colors:
        class_size[c] = class_size.get(c, 0) + 1
    key = [
        (class_size[colors[v]], deg[v], tuple(sorted(deg[w] for w in iter_bits(g.rows[v]))), v)
        for v in range(n)
    ]
    placed = 0
    order = []
    remaining = set(range(n))
    while remaining:
        v = min(remaining, key=lambda u: (-(g.rows[u] & placed).bit_count(), key[u]))
        order.append(v)
        remaining.discard(v)
        placed |= 1 << v
    return order


def is_isomorphic(g: Graph, h: Graph) -> IsoWitness | None:
    """Return an isomorphism ``g -> h`` or ``None``."""
    n = len(g)
    if n != len(h) or g.edge_count != h.edge_count:
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    colors = refine_colors(disjoint_union(g, h))
    cg, ch = colors[:n], colors[n:]
    if sorted(cg) != sorted(ch):
        return None

    class_mask: dict[int, int] = {}
    for w, c in enumerate(ch):
        class_mask[c] = class_mask.get(c, 0) | (1 << w)

    order = _search_order(g, cg)
    f = [-1] * n
    g_rows, h_rows = g.rows, h.rows

    def extend(i: int, placed_g: int, used_h: int) -> bool:
        if i == n:
            return True
        v = order[i]
        prior = g_rows[v] & placed_g
        image = 0
        for u in iter_bits(prior):
            image |= 1 << f[u]
        cand = class_mask[cg[v]] & ~used_h
        if prior:
            cand &= h_rows[f[(prior & -prior).bit_length() - 1]]
        for w in iter_bits(cand):
            if h_rows[w] & used_h != image:
                continue
            f[v] = w
            if extend(i + 1, placed_g | (1 << v), used_h | (1 << w)):
                return True
        f[v] = -1
        return False

    if not extend(0, 0, 0):
        return None
    witness = IsoWitness(tuple(f))
    assert witness.check(g, h)
    return witness
