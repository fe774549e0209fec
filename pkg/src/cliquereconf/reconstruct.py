"""Recover ``TS_{k-1}(G)`` from an unlabelled ``TJ_k(G)`` with ``k = omega(G)``.

The pipeline has three stages:

1. :func:`partition_neighbors` greedily splits every neighbourhood into at
   most ``k`` cliques with no edges between them, or reports why the graph
   is not ``k``-good.
2. :func:`build_msets` turns each part ``S`` of ``N(u)`` into the set
   ``S + u``.  Singletons are kept with multiplicity, larger sets once.
3. :func:`msets_to_graph` makes one node per multiset member and joins two
   members when they intersect.

The result equals ``TS_{k-1}(G)`` up to isolated vertices.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .cliques import Clique, clique_number, enumerate_k_cliques, is_clique
from .graph import Graph, GraphError, add_isolated, bits_to_tuple, complete_graph, iter_bits, join
from .isomorphism import is_isomorphic
from .reconf import LabeledReconfGraph, RuleTag, build_tj, build_ts
from .report import Report

NON_CLIQUE = "non-clique part"
CROSS_EDGE = "edge from part to remainder"
TOO_MANY_PARTS = "more than k parts"


class NotKGoodError(ValueError):
    """``T`` is not ``k``-good.

    ``vertex`` is the vertex whose neighbourhood failed and ``witness`` the
    vertices that prove it:

    * non-clique part: ``(v, a, b)`` with ``a, b`` adjacent to ``v`` and
      ``u`` but not to each other;
    * edge from part to remainder: ``(v, a, b)`` with ``a`` adjacent to
      ``v`` and ``b``, while ``v`` and ``b`` are not adjacent;
    * more than k parts: ``k + 1`` pairwise non-adjacent neighbours of ``u``.
    """

    def __init__(self, vertex: int, reason: str, witness: tuple[int, ...]) -> None:
        super().__init__(f"not k-good at vertex {vertex}: {reason} {witness}")
        self.vertex = vertex
        self.reason = reason
        self.witness = witness


def replay_witness(t: Graph, k: int, err: NotKGoodError) -> bool:
    """Check that a :class:`NotKGoodError` witness really violates k-goodness in ``t``."""
    u, w = err.vertex, err.witness
    nbrs = set(t.neighbors(u))
    if not set(w) <= nbrs:
        return False
    if err.reason == NON_CLIQUE:
        v, a, b = w
        return t.adjacent(v, a) and t.adjacent(v, b) and not t.adjacent(a, b)
    if err.reason == CROSS_EDGE:
        v, a, b = w
        return (v == a or t.adjacent(v, a)) and t.adjacent(a, b) and not t.adjacent(v, b) and v != b
    if err.reason == TOO_MANY_PARTS:
        return len(set(w)) == k + 1 and all(
            not t.adjacent(x, y) for i, x in enumerate(w) for y in w[i + 1 :]
        )
    return False


@dataclass(frozen=True)
class NeighborPartition:
    """``parts[u][i]`` is ``S_{i+1}(u)`` as a sorted tuple (possibly empty)."""

    k: int
    parts: tuple[tuple[tuple[int, ...], ...], ...]

    def validate(self, t: Graph) -> None:
        for u, sets in enumerate(self.parts):
            if len(sets) != self.k:
                raise GraphError(f"vertex {u} has {len(sets)} parts, expected {self.k}")
            seen: set[int] = set()
            for s in sets:
                if seen & set(s):
                    raise GraphError(f"parts of vertex {u} overlap")
                seen |= set(s)
                if not is_clique(t, s):
                    raise GraphError(f"part {s} of vertex {u} is not a clique")
            if seen != set(t.neighbors(u)):
                raise GraphError(f"parts of vertex {u} do not cover its neighbourhood")
            for i, s in enumerate(sets):
                for r in sets[i + 1 :]:
                    if any(t.adjacent(a, b) for a in s for b in r):
                        raise GraphError(f"edge between two parts of vertex {u}")


def partition_neighbors(t: Graph, k: int) -> NeighborPartition:
    """Split each neighbourhood of ``t`` into ``k`` cliques with no cross edges.

    Raises :class:`NotKGoodError` on the first vertex where the greedy pass
    fails.  The seed of each part is the lowest-numbered remaining neighbour.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    rows = t.rows
    parts = []
    for u in range(len(t)):
        remain = rows[u]
        seeds: list[int] = []
        sets: list[tuple[int, ...]] = []
        for _ in range(k):
            if not remain:
                sets.append(())
                continue
            v = (remain & -remain).bit_length() - 1
            seeds.append(v)
            part = (remain & rows[v]) | (1 << v)
            remain &= ~part
            for a in iter_bits(part):
                missing = part & ~rows[a] & ~(1 << a)
                if missing:
                    b = (missing & -missing).bit_length() - 1
                    raise NotKGoodError(u, NON_CLIQUE, (v, a, b))
            for a in iter_bits(part):
                cross = rows[a] & remain
                if cross:
                    b = (cross & -cross).bit_length() - 1
                    raise NotKGoodError(u, CROSS_EDGE, (v, a, b))
            sets.append(bits_to_tuple(part))
        if remain:
            r = (remain & -remain).bit_length() - 1
            raise NotKGoodError(u, TOO_MANY_PARTS, tuple(seeds) + (r,))
        parts.append(tuple(sets))
    return NeighborPartition(k, tuple(parts))


def is_k_good(t: Graph, k: int) -> bool:
    try:
        partition_neighbors(t, k)
    except NotKGoodError:
        return False
    return True


class Msets:
    """A multiset of node sets, stored as ``sorted tuple -> multiplicity``."""

    def __init__(self, counts: dict[tuple[int, ...], int] | None = None) -> None:
        self.counts: Counter[tuple[int, ...]] = Counter()
        for s, c in (counts or {}).items():
            self.add(s, c)

    def add(self, members, count: int = 1) -> None:
        key = tuple(sorted(members))
        if not key:
            raise ValueError("Msets members must be non-empty")
        self.counts[key] += count

    def __contains__(self, members) -> bool:
        return tuple(sorted(members)) in self.counts

    def __len__(self) -> int:
        return sum(self.counts.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Msets):
            return NotImplemented
        return +self.counts == +other.counts

    def __repr__(self) -> str:
        inner = ", ".join(
            f"{set(s)}x{c}" if c > 1 else str(set(s)) for s, c in sorted(self.counts.items())
        )
        return f"Msets({inner})"

    def members(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """Expanded ``(set, copy_index)`` pairs sorted by size, content, copy."""
        for s in sorted(self.counts, key=lambda s: (len(s), s)):
            for copy in range(self.counts[s]):
                yield s, copy

    def validate(self, t: Graph, k: int) -> None:
        """Raise :class:`GraphError` unless the multiset is a valid edge-clique cover of ``t``.

        Required: distinct members share at most one node, every member is a
        clique, every node is in exactly ``k`` members counting copies, and
        every edge is in exactly one member.
        """
        keys = list(self.counts)
        for s, c in self.counts.items():
            if len(s) >= 2 and c != 1:
                raise GraphError(f"set {s} of size >= 2 has multiplicity {c}")
            if not is_clique(t, s):
                raise GraphError(f"set {s} is not a clique")
        seen_pairs: dict[tuple[int, int], tuple[int, ...]] = {}
        for s in keys:
            for i, a in enumerate(s):
                for b in s[i + 1 :]:
                    if (a, b) in seen_pairs:
                        raise GraphError(f"sets {seen_pairs[a, b]} and {s} share two nodes")
                    seen_pairs[a, b] = s
        cover = Counter()
        for s, c in self.counts.items():
            for v in s:
                cover[v] += c
        for v in range(len(t)):
            if cover[v] != k:
                raise GraphError(f"node {v} lies in {cover[v]} sets, expected {k}")
        for e in t.edges():
            if e not in seen_pairs:
                raise GraphError(f"edge {e} lies in no set")


def build_msets(t: Graph, k: int, p: NeighborPartition) -> Msets:
    m = Msets()
    for u, sets in enumerate(p.parts):
        for s in sets:
            members = tuple(sorted(s + (u,)))
            if len(members) == 1 or members not in m:
                m.add(members)
    m.validate(t, k)
    return m


def msets_to_graph(m: Msets) -> Graph:
    """One node per member (copies included), edges between intersecting members."""
    nodes = list(m.members())
    containing: dict[int, list[int]] = {}
    for idx, (s, _) in enumerate(nodes):
        for v in s:
            containing.setdefault(v, []).append(idx)
    edges = set()
    for idxs in containing.values():
        for a, i in enumerate(idxs):
            for j in idxs[a + 1 :]:
                edges.add((i, j))
    names = ["{" + ",".join(map(str, s)) + "}" + (f"#{c}" if m.counts[s] > 1 else "") for s, c in nodes]
    return Graph.from_edges(len(nodes), sorted(edges), names)


def reconstruct_ts(t: Graph, k: int) -> Graph:
    """Graph that, plus some isolated vertices, is ``TS_{k-1}(G)`` when ``t = TJ_k(G)`` and ``k = omega(G)``."""
    if k < 2:
        raise ValueError("reconstruction needs k >= 2")
    p = partition_neighbors(t, k)
    return msets_to_graph(build_msets(t, k, p))


# -- ground truth from labels ---------------------------------------------


def _require_max_tj(t: LabeledReconfGraph) -> None:
    if t.rule.tag is not RuleTag.TJ:
        raise ValueError(f"expected a TJ graph, got {t.rule}")
    if t.k != clique_number(t.base):
        raise ValueError(f"expected k = omega(base) = {clique_number(t.base)}, got {t.k}")


def expand(t: LabeledReconfGraph, w: Clique) -> frozenset[int]:
    """Nodes of ``t`` whose clique contains the ``(k-1)``-clique ``w``."""
    _require_max_tj(t)
    if len(w) != t.k - 1:
        raise ValueError(f"expected a {t.k - 1}-clique, got size {len(w)}")
    if not is_clique(t.base, w.members):
        raise GraphError(f"{w.names(t.base)} is not a clique of the base graph")
    wm = w.mask
    return frozenset(i for i, c in enumerate(t.labels) if c.mask & wm == wm)


def msets_reference(t: LabeledReconfGraph) -> Msets:
    """The multiset of non-empty ``expand(t, w)`` over all ``(k-1)``-cliques ``w``."""
    _require_max_tj(t)
    m = Msets()
    for w in enumerate_k_cliques(t.base, t.k - 1):
        e = expand(t, w)
        if e:
            m.add(e)
    return m


def isolated_count(t: LabeledReconfGraph) -> int:
    """Number of ``(k-1)``-cliques contained in no node of ``t``."""
    _require_max_tj(t)
    return sum(1 for w in enumerate_k_cliques(t.base, t.k - 1) if not expand(t, w))


def verify_reconstruction(g: Graph) -> Report:
    """Run the unlabelled pipeline on ``TJ_omega(g)`` and compare with ground truth.

    Passes when the rebuilt graph plus ``c`` isolated vertices is isomorphic to
    ``TS_{k-1}(g)``, with ``c`` counted as the ``(k-1)``-cliques of ``g`` that
    lie in no ``k``-clique, and the Msets built without labels equal the
    labelled reference.
    """
    k = clique_number(g)
    if k < 2:
        raise ValueError("verify_reconstruction needs omega(g) >= 2")
    t = build_tj(g, k)
    stripped = t.stripped()
    values: dict = {"k": k, "tj_nodes": len(stripped), "tj_edges": stripped.edge_count}
    try:
        p = partition_neighbors(stripped, k)
    except NotKGoodError as err:
        witness = {"vertex": err.vertex, "reason": err.reason, "vertices": list(err.witness)}
        return Report("reconstruction", False, values, witness)
    m = build_msets(stripped, k, p)
    h = msets_to_graph(m)
    c = isolated_count(t)
    ts = build_ts(g, k - 1).graph
    iso = is_isomorphic(add_isolated(h, c), ts)
    reference = msets_reference(t)
    values.update(
        h_nodes=len(h), h_edges=h.edge_count, c=c, ts_nodes=len(ts), ts_edges=ts.edge_count
    )
    ok = iso is not None and m == reference
    witness = None
    if not ok:
        witness = {
            "isomorphic": iso is not None,
            "msets_equal": m == reference,
            "msets": repr(m),
            "reference": repr(reference),
        }
    return Report("reconstruction", ok, values, witness)


def join_lift(g: Graph, n: int) -> Graph:
    """``g`` joined with ``K_{n - omega(g)}``; its ``TJ_n`` matches ``TJ_omega(g)``."""
    w = clique_number(g)
    if n < w:
        raise ValueError(f"n = {n} is below omega(g) = {w}")
    if n == w:
        return g
    return join(g, complete_graph(n - w))
