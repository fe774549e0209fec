"""Reconfiguration graphs of cliques under TS, TJ and TAR.

Nodes are cliques of a base graph, kept in clique-enumeration order.  TS/TJ
edges are found by bucketing every clique under each of its ``(k-1)``-subsets:
two distinct ``k``-cliques are TJ-adjacent iff they share a bucket, and each
adjacent pair shares exactly one.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from itertools import combinations

from . import kernels
from .cliques import Clique
from .graph import Graph, GraphError, iter_bits, tuple_to_bits


class RuleTag(str, enum.Enum):
    TS = "TS"
    TJ = "TJ"
    TAR_LOWER = "TAR_lower"
    TAR_UPPER = "TAR_upper"
    # TS moves over arbitrary k-subsets (token graph); not a clique rule
    TOKEN = "TOKEN"


_THRESHOLD_TAGS = {RuleTag.TAR_LOWER, RuleTag.TAR_UPPER}


@dataclass(frozen=True)
class Rule:
    tag: RuleTag
    threshold: int | None = None

    def __post_init__(self) -> None:
        if (self.threshold is not None) != (self.tag in _THRESHOLD_TAGS):
            raise ValueError(f"rule {self.tag.value} threshold mismatch: {self.threshold}")

    def __str__(self) -> str:
        if self.threshold is None:
            return self.tag.value
        return f"{self.tag.value}({self.threshold})"


@dataclass(frozen=True)
class LabeledReconfGraph:
    """A reconfiguration graph whose node ``i`` is the clique ``labels[i]`` of ``base``.

    ``k`` is the clique size for TS/TJ/token graphs and the threshold for TAR.
    """

    base: Graph
    rule: Rule
    k: int
    graph: Graph
    labels: tuple[Clique, ...]
    _index: dict[Clique, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {c: i for i, c in enumerate(self.labels)})
        if len(self._index) != len(self.labels):
            raise GraphError("reconfiguration labels must be distinct")
        if len(self.labels) != len(self.graph):
            raise GraphError("one label per node required")

    def index_of(self, clique: Clique) -> int | None:
        return self._index.get(clique)

    def __len__(self) -> int:
        return len(self.labels)

    def stripped(self) -> Graph:
        """The bare graph with node names removed."""
        return Graph(self.graph.rows)

    def to_json(self) -> str:
        """Byte-deterministic JSON: rule, k, node name lists, sorted edge pairs.

        Each node list gives base-vertex names in vertex-index order.
        """
        doc = {
            "rule": self.rule.tag.value,
            "k": self.k,
            "nodes": [c.names(self.base) for c in self.labels],
            "edges": [list(e) for e in self.graph.edges()],
        }
        return json.dumps(doc, separators=(",", ":"), ensure_ascii=False) + "\n"


def _label_name(base: Graph, mask: int) -> str:
    return "{" + ",".join(base.name(v) for v in iter_bits(mask)) + "}"


def _assemble(base: Graph, rule: Rule, k: int, masks: list[int], edges) -> LabeledReconfGraph:
    graph = Graph.from_edges(len(masks), edges, [_label_name(base, m) for m in masks])
    labels = tuple(Clique.from_mask(m) for m in masks)
    return LabeledReconfGraph(base, rule, k, graph, labels)


def exchange_edges(masks: list[int], base_rows: tuple[int, ...] | None) -> list[tuple[int, int]]:
    """Pairs of equal-size sets differing by one swapped element.

    With ``base_rows`` the swapped elements must also be adjacent (TS);
    without, any swap counts (TJ).
    """
    buckets: dict[int, list[int]] = {}
    for idx, m in enumerate(masks):
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            buckets.setdefault(m ^ low, []).append(idx)
    edges = []
    for key, members in buckets.items():
        if len(members) < 2:
            continue
        for a, i in enumerate(members):
            u = (masks[i] ^ key).bit_length() - 1
            row = base_rows[u] if base_rows is not None else -1
            for j in members[a + 1 :]:
                if row & (masks[j] ^ key):
                    edges.append((i, j))
    edges.sort()
    return edges


def _check_size(k: int) -> None:
    if k < 1:
        raise ValueError("TS/TJ need k >= 1; no token moves exist from the empty clique")


def build_ts(g: Graph, k: int) -> LabeledReconfGraph:
    """``TS_k(g)``: ``k``-cliques, adjacent when one token slides along an edge."""
    _check_size(k)
    masks = kernels.k_cliques(g.rows, k)
    return _assemble(g, Rule(RuleTag.TS), k, masks, exchange_edges(masks, g.rows))


def build_tj(g: Graph, k: int) -> LabeledReconfGraph:
    """``TJ_k(g)``: ``k``-cliques, adjacent when one token jumps anywhere."""
    _check_size(k)
    masks = kernels.k_cliques(g.rows, k)
    return _assemble(g, Rule(RuleTag.TJ), k, masks, exchange_edges(masks, None))


def _tar(g: Graph, rule: Rule, lo: int, hi: int | None) -> LabeledReconfGraph:
    masks: list[int] = []
    size = max(lo, 0)
    while hi is None or size <= hi:
        layer = kernels.k_cliques(g.rows, size)
        if not layer:
            break
        masks.extend(layer)
        size += 1
    index = {m: i for i, m in enumerate(masks)}
    edges = []
    for j, m in enumerate(masks):
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            i = index.get(m ^ low)
            if i is not None:
                edges.append((i, j))
    edges.sort()
    return _assemble(g, rule, rule.threshold, masks, edges)


def build_tar_lower(g: Graph, k: int) -> LabeledReconfGraph:
    """``TAR_k(g)``: cliques of size at least ``k``, adjacent when they differ by one token."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return _tar(g, Rule(RuleTag.TAR_LOWER, k), k, None)


def build_tar_upper(g: Graph, k: int) -> LabeledReconfGraph:
    """``TAR^k(g)``: cliques of size at most ``k``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return _tar(g, Rule(RuleTag.TAR_UPPER, k), 0, k)


def build_simplex(g: Graph) -> LabeledReconfGraph:
    """The simplex graph ``TAR(g) = TAR_0(g)``; includes the empty clique."""
    return build_tar_lower(g, 0)


def token_graph(g: Graph, k: int) -> LabeledReconfGraph:
    """``F_k(g)``: all ``k``-subsets of vertices with TS adjacency.

    Labels reuse :class:`Clique` as a sorted vertex set; they need not be
    cliques of ``g``.
    """
    if not 1 <= k <= len(g):
        raise ValueError(f"token graph needs 1 <= k <= |V|, got k={k}")
    masks = [tuple_to_bits(s) for s in combinations(range(len(g)), k)]
    return _assemble(g, Rule(RuleTag.TOKEN), k, masks, exchange_edges(masks, g.rows))


def build(g: Graph, rule: str, k: int | None) -> LabeledReconfGraph:
    """Dispatch on the CLI rule names ``ts|tj|tar-lower|tar-upper|simplex|token``."""
    if rule == "simplex":
        return build_simplex(g)
    if k is None:
        raise ValueError(f"rule {rule!r} needs k")
    builders = {
        "ts": build_ts,
        "tj": build_tj,
        "tar-lower": build_tar_lower,
        "tar-upper": build_tar_upper,
        "token": token_graph,
    }
    try:
        return builders[rule](g, k)
    except KeyError:
        raise ValueError(f"unknown rule {rule!r}") from None
