"""Verifiers for structural facts about clique reconfiguration graphs.

Each ``verify_*``/``*_check`` function builds the relevant reconfiguration
graph, measures it exactly and returns a :class:`~cliquereconf.report.Report`
whose ``passed`` flag says whether the predicted property holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import kernels
from .cliques import Clique, clique_number, count_k3, count_k4, is_clique
from .coloring import chromatic_number
from .families import johnson
from .graph import Graph, iter_bits
from .planarity import is_planar
from .properties import is_acyclic, is_bipartite, is_median_graph, max_degree
from .reconf import LabeledReconfGraph, RuleTag, build_simplex, build_tj, build_ts
from .report import Report


class PreconditionError(ValueError):
    """The input does not satisfy the hypothesis of the property being checked."""


# -- clique decomposition in TS_k ------------------------------------------


@dataclass(frozen=True)
class CliqueDecomposition:
    """How ``n >= 3`` pairwise TS-adjacent ``k``-cliques share their vertices.

    ``kind == "Int"``: ``core`` has ``k - 1`` vertices and clique ``i`` is
    ``core + attachments[i]``.  ``kind == "Uni"``: ``core`` has ``k + 1``
    vertices and clique ``i`` is ``core - attachments[i]``.
    """

    kind: str
    core: Clique
    attachments: tuple[int, ...]

    def members(self) -> list[Clique]:
        core = set(self.core)
        if self.kind == "Int":
            return [Clique(tuple(sorted(core | {a}))) for a in self.attachments]
        return [Clique(tuple(sorted(core - {a}))) for a in self.attachments]


def decompose_ts_clique(
    nodes: Sequence[Clique], k: int, base: Graph | None = None
) -> CliqueDecomposition:
    """Decompose a complete subgraph of ``TS_k`` into a common core plus one vertex each.

    The ``Int`` form is returned whenever it exists.  With ``base`` given, the
    input is also checked to be pairwise TS-adjacent in ``base``.
    """
    n = len(nodes)
    if n < 3:
        raise ValueError("need at least three cliques")
    sets = [set(c) for c in nodes]
    if any(len(s) != k for s in sets):
        raise ValueError(f"every clique must have size {k}")
    for i in range(n):
        for j in range(i + 1, n):
            if len(sets[i] & sets[j]) != k - 1:
                raise ValueError(f"{nodes[i].members} and {nodes[j].members} are not adjacent")
            if base is not None:
                (u,) = sets[i] - sets[j]
                (v,) = sets[j] - sets[i]
                if not base.adjacent(u, v):
                    raise ValueError(f"{nodes[i].members} and {nodes[j].members} differ by a non-edge")
    if base is not None and not all(is_clique(base, s) for s in sets):
        raise ValueError("inputs must be cliques of the base graph")

    common = set.intersection(*sets)
    if len(common) == k - 1:
        attachments = tuple(next(iter(s - common)) for s in sets)
        return CliqueDecomposition("Int", Clique(tuple(sorted(common))), attachments)
    union = set.union(*sets)
    if len(union) == k + 1:
        if base is not None and not is_clique(base, union):
            raise AssertionError(f"union {sorted(union)} is not a clique of the base graph")
        attachments = tuple(next(iter(union - s)) for s in sets)
        return CliqueDecomposition("Uni", Clique(tuple(sorted(union))), attachments)
    raise AssertionError(f"no decomposition for {[c.members for c in nodes]}")


def ts_clique_decomposition_check(g: Graph, k: int) -> Report:
    """Decompose every complete subgraph on >= 3 nodes of ``TS_k(g)``.

    Fails if some subgraph has no decomposition or if one with more than
    ``k + 1`` nodes is not of the ``Int`` form.
    """
    t = build_ts(g, k)
    rows = t.graph.rows
    checked = 0
    size = 3
    while True:
        masks = kernels.k_cliques(rows, size)
        if not masks:
            break
        for m in masks:
            nodes = [t.labels[i] for i in iter_bits(m)]
            try:
                d = decompose_ts_clique(nodes, k, g)
            except (AssertionError, ValueError) as err:
                return Report("decompose", False, {"k": k, "checked": checked},
                              {"nodes": [c.names(g) for c in nodes], "error": str(err)})
            if size > k + 1 and d.kind != "Int":
                return Report("decompose", False, {"k": k, "checked": checked},
                              {"nodes": [c.names(g) for c in nodes], "kind": d.kind})
            checked += 1
        size += 1
    return Report("decompose", True, {"k": k, "checked": checked})


# -- clique number of TS_k ---------------------------------------------------


def predicted_ts_omega(omega: int, k: int) -> int:
    if k > omega:
        return 0
    if k == omega:
        return 1
    return max(k + 1, omega - k + 1)


def verify_omega_formula(g: Graph, k: int) -> Report:
    """Compare ``omega(TS_k(g))`` with the three-case prediction from ``omega(g)``.

    An empty reconfiguration graph has clique number 0.
    """
    w = clique_number(g)
    actual = clique_number(build_ts(g, k).graph)
    expected = predicted_ts_omega(w, k)
    values = {"k": k, "omega_g": w, "expected": expected, "actual": actual}
    return Report("omega-formula", actual == expected, values)


def verify_tj_omega_lower_bound(g: Graph, k: int) -> Report:
    """For ``k < omega(g)``: ``omega(TJ_k(g)) >= max(k + 1, omega(g) - k + 1)``."""
    w = clique_number(g)
    if not 1 <= k < w:
        raise PreconditionError(f"need 1 <= k < omega(g) = {w}")
    actual = clique_number(build_tj(g, k).graph)
    bound = max(k + 1, w - k + 1)
    return Report("tj-omega-bound", actual >= bound, {"k": k, "omega_g": w, "bound": bound, "actual": actual})


# -- chromatic number of TS_k ------------------------------------------------


@lru_cache(maxsize=None)
def johnson_chromatic_number(n: int, k: int) -> int:
    """``chi(J(n, k))``, taken as 0 when ``k > n`` (no vertices)."""
    if k > n:
        return 0
    return chromatic_number(johnson(n, k))


def chromatic_sandwich(g: Graph, k: int) -> tuple[int, int, int]:
    """``(chi(J(omega(g), k)), chi(TS_k(g)), chi(J(chi(g), k)))``."""
    lower = johnson_chromatic_number(clique_number(g), k)
    exact = chromatic_number(build_ts(g, k).graph)
    upper = johnson_chromatic_number(chromatic_number(g), k)
    return lower, exact, upper


def verify_chromatic_sandwich(g: Graph, k: int) -> Report:
    lower, exact, upper = chromatic_sandwich(g, k)
    values = {"k": k, "lower": lower, "exact": exact, "upper": upper}
    return Report("sandwich", lower <= exact <= upper, values)


# -- TJ_omega structure ------------------------------------------------------


def has_induced_diamond(g: Graph) -> tuple[int, int, int, int] | None:
    """An induced ``K_4 - e`` as ``(a, b, c, d)`` with ``ad`` the missing edge.

    Scans edges ``bc`` for two non-adjacent common neighbours.
    """
    rows = g.rows
    for b, c in g.edges():
        common = rows[b] & rows[c]
        for a in iter_bits(common):
            rest = common & ~rows[a] & ~((1 << (a + 1)) - 1)
            if rest:
                d = (rest & -rest).bit_length() - 1
                return (a, b, c, d)
    return None


def verify_diamond_free(g: Graph) -> Report:
    """``TJ_omega(g)`` has no induced diamond."""
    w = clique_number(g)
    if w < 1:
        return Report("diamond-free", True, {"omega_g": w, "tj_nodes": 0})
    t = build_tj(g, w)
    found = has_induced_diamond(t.graph)
    witness = None if found is None else [t.labels[i].names(g) for i in found]
    return Report("diamond-free", found is None, {"omega_g": w, "tj_nodes": len(t)}, witness)


def verify_tj_triangle_intersections(t: LabeledReconfGraph) -> Report:
    """Every triangle ``A, B, C`` of ``TJ_omega`` has ``A&B == B&C == A&C``."""
    if t.rule.tag is not RuleTag.TJ:
        raise PreconditionError(f"expected a TJ graph, got {t.rule}")
    w = clique_number(t.base)
    if t.k != w:
        raise PreconditionError(f"expected k = omega(base) = {w}, got {t.k}")
    masks = [c.mask for c in t.labels]
    triangles = 0
    for tri in kernels.k_cliques(t.graph.rows, 3):
        a, b, c = (masks[i] for i in iter_bits(tri))
        triangles += 1
        if not (a & b == b & c == a & c):
            nodes = [t.labels[i].names(t.base) for i in iter_bits(tri)]
            return Report("triangle-intersections", False, {"triangles": triangles}, nodes)
    return Report("triangle-intersections", True, {"triangles": triangles})


def verify_ts_tj_vertex_edge_duality(g: Graph, k: int) -> Report:
    """``AB`` is an edge of ``TS_{k-1}(g)`` iff ``A | B`` is a ``k``-clique of ``g``.

    Checked over every pair of ``(k-1)``-cliques.
    """
    w = clique_number(g)
    if not 2 <= k <= w:
        raise PreconditionError(f"need 2 <= k <= omega(g) = {w}")
    ts = build_ts(g, k - 1)
    tj_nodes = set(kernels.k_cliques(g.rows, k))
    masks = [c.mask for c in ts.labels]
    pairs = 0
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            pairs += 1
            edge = ts.graph.adjacent(i, j)
            node = (masks[i] | masks[j]) in tj_nodes
            if edge != node:
                witness = {"A": ts.labels[i].names(g), "B": ts.labels[j].names(g), "edge": edge}
                return Report("duality", False, {"k": k, "pairs": pairs}, witness)
    return Report("duality", True, {"k": k, "pairs": pairs})


# -- planar graphs -----------------------------------------------------------


def _require_planar(g: Graph) -> None:
    if not is_planar(g):
        raise PreconditionError("input graph is not planar")


def triangle_bounds_check(g: Graph) -> Report:
    """Triangle and ``K_4`` counting bounds for planar graphs.

    Each inequality is applied only where its derivation is meaningful:
    ``F3 <= |E| - 2`` and ``F3 <= 3|V| - 8`` need ``F3 >= 1``;
    ``2 F4 <= F3 - 2`` needs ``F4 >= 1``.  Inapplicable inequalities that
    fail numerically are listed under ``findings`` without failing the check.
    """
    _require_planar(g)
    nv, ne = len(g), g.edge_count
    f3, f4 = count_k3(g), count_k4(g)
    clauses = [
        ("F3 <= |E| - 2", f3, ne - 2, f3 >= 1),
        ("2*F4 <= F3 - 2", 2 * f4, f3 - 2, f4 >= 1),
        ("F3 <= 3|V| - 8", f3, 3 * nv - 8, nv >= 3 and f3 >= 1),
    ]
    checks = []
    findings = []
    ok = True
    for name, lhs, rhs, applicable in clauses:
        holds = lhs <= rhs
        checks.append({"bound": name, "lhs": lhs, "rhs": rhs, "margin": rhs - lhs,
                       "applicable": applicable, "holds": holds})
        if applicable and not holds:
            ok = False
        if not applicable and not holds:
            findings.append(f"{name} fails vacuously: {lhs} > {rhs}")
    values = {"V": nv, "E": ne, "F3": f3, "F4": f4, "checks": checks, "findings": findings}
    return Report("triangle-bounds", ok, values)


def tj4_structure_check(g: Graph) -> Report:
    """``TJ_4`` of a planar graph is a forest with maximum degree at most 4."""
    _require_planar(g)
    t = build_tj(g, 4).graph
    acyclic = is_acyclic(t)
    degree = max_degree(t)
    values = {"tj4_nodes": len(t), "tj4_edges": t.edge_count, "acyclic": acyclic, "max_degree": degree}
    return Report("tj4", acyclic and degree <= 4, values)


def ts_planarity_check(g: Graph, k: int) -> Report:
    """``TS_k`` of a planar graph is planar for ``1 <= k <= 4``."""
    if not 1 <= k <= 4:
        raise PreconditionError("k must be in 1..4")
    _require_planar(g)
    t = build_ts(g, k).graph
    planar = is_planar(t)
    return Report("ts-planar", planar, {"k": k, "ts_nodes": len(t), "ts_edges": t.edge_count})


# -- simplex graphs ----------------------------------------------------------


def simplex_median_check(g: Graph) -> Report:
    """The simplex graph of ``g`` is a bipartite median graph."""
    s = build_simplex(g).graph
    median = is_median_graph(s)
    bipartite = is_bipartite(s)
    values = {"nodes": len(s), "edges": s.edge_count, "median": median, "bipartite": bipartite}
    return Report("median", median and bipartite, values)


# -- Expand sets -------------------------------------------------------------


def verify_expand_adjacency(g: Graph) -> Report:
    """For ``k = omega(g)``, distinct ``(k-1)``-cliques ``w, r``: their expansions meet
    iff ``wr`` is an edge of ``TS_{k-1}(g)``.  Expansions are computed from labels.
    """
    from .reconstruct import expand

    k = clique_number(g)
    if k < 2:
        raise PreconditionError("need omega(g) >= 2")
    t = build_tj(g, k)
    ts = build_ts(g, k - 1)
    expansions = [expand(t, w) for w in ts.labels]
    for i in range(len(expansions)):
        for j in range(i + 1, len(expansions)):
            meet = bool(expansions[i] & expansions[j])
            if meet != ts.graph.adjacent(i, j):
                witness = {"w": ts.labels[i].names(g), "r": ts.labels[j].names(g), "meet": meet}
                return Report("expand-adjacency", False, {"k": k}, witness)
    return Report("expand-adjacency", True, {"k": k, "ts_nodes": len(ts)})
