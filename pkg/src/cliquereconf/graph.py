"""Simple undirected graphs over dense integer vertices.

Adjacency is stored as one Python ``int`` bitset per vertex: bit ``v`` of
``rows[u]`` is set iff ``uv`` is an edge.  Graphs are immutable; every
operation returns a new graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for invalid graph construction (self-loops, bad indices)."""


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_tuple(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def tuple_to_bits(members: Iterable[int]) -> int:
    mask = 0
    for v in members:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph.

    ``rows[u]`` is the neighbourhood bitset of vertex ``u``.  ``names`` is
    display-only and never participates in equality.
    """

    rows: tuple[int, ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        n = len(self.rows)
        full = (1 << n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"vertex {u} has a neighbour outside 0..{n - 1}")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
            for v in iter_bits(row):
                if not self.rows[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        if self.names is not None and len(self.names) != n:
            raise GraphError("names must have one entry per vertex")

    # -- construction ---------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        names: Sequence[str] | None = None,
    ) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for {n} vertices")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(tuple(rows), tuple(names) if names is not None else None)

    # -- queries --------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return bits_to_tuple(self.rows[u])

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def name(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)

    def vertex_names(self) -> tuple[str, ...]:
        return self.names if self.names is not None else tuple(str(v) for v in range(len(self.rows)))

    def with_names(self, names: Sequence[str] | None) -> Graph:
        return Graph(self.rows, tuple(names) if names is not None else None)

    def induced_subgraph(self, vertices: Sequence[int]) -> Graph:
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for w in iter_bits(self.rows[v]):
                if w in index:
                    row |= 1 << index[w]
            rows.append(row)
        names = None if self.names is None else tuple(self.names[v] for v in vertices)
        return Graph(tuple(rows), names)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = 0
        comps = []
        for s in range(len(self.rows)):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.rows[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(iter_bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def __repr__(self) -> str:
        return f"Graph(n={len(self.rows)}, m={self.edge_count})"


# -- small named graphs ---------------------------------------------------


def empty_graph(n: int = 0) -> Graph:
    """``n`` isolated vertices (``nK_1``)."""
    return Graph((0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(tuple(full & ~(1 << u) for u in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def star_graph(leaves: int) -> Graph:
    return complete_bipartite_graph(1, leaves)


def diamond_graph() -> Graph:
    """``K_4 - e`` on a, b, c, d with ``ad`` missing."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)], names="abcd")


# -- operations -----------------------------------------------------------


def complement(g: Graph) -> Graph:
    n = len(g)
    full = (1 << n) - 1
    return Graph(tuple(full & ~row & ~(1 << u) for u, row in enumerate(g.rows)), g.names)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = len(g)
    rows = g.rows + tuple(row << shift for row in h.rows)
    names = None
    if g.names is not None or h.names is not None:
        names = g.vertex_names() + h.vertex_names()
    return Graph(rows, names)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    ng, nh = len(g), len(h)
    g_all = (1 << ng) - 1
    h_all = ((1 << nh) - 1) << ng
    union = disjoint_union(g, h)
    rows = tuple(row | (h_all if u < ng else g_all) for u, row in enumerate(union.rows))
    return Graph(rows, union.names)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Vertex ``(a, x)`` has index ``a * len(h) + x``."""
    ng, nh = len(g), len(h)
    edges = []
    for a in range(ng):
        for x, y in h.edges():
            edges.append((a * nh + x, a * nh + y))
    for a, b in g.edges():
        for x in range(nh):
            edges.append((a * nh + x, b * nh + x))
    names = [f"({g.name(a)},{h.name(x)})" for a in range(ng) for x in range(nh)]
    return Graph.from_edges(ng * nh, edges, names)


def add_isolated(g: Graph, c: int) -> Graph:
    """``g + cK_1``."""
    if c < 0:
        raise GraphError("c must be non-negative")
    if c == 0:
        return g
    names = None
    if g.names is not None:
        names = g.names + _fresh_names(g.names, c)
    return Graph(g.rows + (0,) * c, names)


def _fresh_names(taken: Sequence[str], count: int) -> tuple[str, ...]:
    used = set(taken)
    out = []
    i = 0
    while len(out) < count:
        if str(i) not in used:
            out.append(str(i))
        i += 1
    return tuple(out)


# -- text formats ---------------------------------------------------------

_HEADER = re.compile(r"^n\s+(\S+)$")


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated ``u v`` lines into a graph.

    Vertices are numbered in order of first appearance.  ``#`` comments and
    blank lines are skipped.  A leading ``n <count>`` header fixes the total
    vertex count; vertices never mentioned by an edge are added as isolated
    vertices with the smallest unused integer names.
    """
    index: dict[str, int] = {}
    names: list[str] = []
    edges: set[tuple[int, int]] = set()
    declared: int | None = None
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        header = _HEADER.match(line)
        if header and not seen_content and declared is None:
            try:
                declared = int(header.group(1))
            except ValueError:
                raise ParseError(lineno, f"bad vertex count {header.group(1)!r}") from None
            if declared < 0:
                raise ParseError(lineno, "vertex count must be non-negative")
            continue
        seen_content = True
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(lineno, f"expected 'u v', got {line!r}")
        u, v = tokens
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at {u!r}")
        ids = []
        for tok in (u, v):
            if tok not in index:
                index[tok] = len(names)
                names.append(tok)
            ids.append(index[tok])
        a, b = sorted(ids)
        edges.add((a, b))
    if declared is not None:
        if len(names) > declared:
            raise ParseError(0, f"header declares {declared} vertices but {len(names)} are named")
        names.extend(_fresh_names(names, declared - len(names)))
    return Graph.from_edges(len(names), sorted(edges), names)


def format_edge_list(g: Graph) -> str:
    """Inverse of :func:`parse_edge_list` up to vertex order of isolated vertices."""
    lines = [f"n {len(g)}"]
    lines.extend(f"{g.name(u)} {g.name(v)}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def format_dot(g: Graph, name: str = "G", labels: Sequence[str] | None = None) -> str:
    labels = labels if labels is not None else g.vertex_names()
    lines = [f"graph {_dot_quote(name)} {{"]
    for v in range(len(g)):
        lines.append(f"  {v} [label={_dot_quote(labels[v])}];")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
