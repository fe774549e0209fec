"""Pure-Python bitset kernels.

Reference implementations of the hot loops.  ``_ckernels.pyx`` mirrors every
function here for graphs with at most 64 vertices and must return identical
results (same order included).
"""

from __future__ import annotations

import sys
from typing import Sequence

# recursion depth is bounded by the clique size / vertex count
sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


def k_cliques(rows: Sequence[int], k: int) -> list[int]:
    """Bitmasks of all ``k``-cliques, in lexicographic order of members."""
    if k == 0:
        return [0]
    out: list[int] = []

    def extend(mask: int, cand: int, depth: int) -> None:
        if depth == k:
            out.append(mask)
            return
        need = k - depth
        while cand:
            if cand.bit_count() < need:
                return
            low = cand & -cand
            cand ^= low
            extend(mask | low, cand & rows[low.bit_length() - 1], depth + 1)

    extend(0, (1 << len(rows)) - 1, 0)
    return out


def count_k_cliques(rows: Sequence[int], k: int) -> int:
    if k == 0:
        return 1

    def count(cand: int, depth: int) -> int:
        if depth == k - 1:
            return cand.bit_count()
        need = k - depth
        total = 0
        while cand:
            if cand.bit_count() < need:
                break
            low = cand & -cand
            cand ^= low
            total += count(cand & rows[low.bit_length() - 1], depth + 1)
        return total

    return count((1 << len(rows)) - 1, 0)


def maximal_cliques(rows: Sequence[int]) -> list[int]:
    """Bron-Kerbosch with Tomita pivoting; order is search order."""
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p:
            if not x:
                out.append(r)
            return
        best = -1
        pivot_row = 0
        px = p | x
        while px:
            low = px & -px
            px ^= low
            row = rows[low.bit_length() - 1]
            c = (p & row).bit_count()
            if c > best:
                best, pivot_row = c, row
        todo = p & ~pivot_row
        while todo:
            low = todo & -todo
            todo ^= low
            row = rows[low.bit_length() - 1]
            bk(r | low, p & row, x & row)
            p ^= low
            x |= low

    bk(0, (1 << len(rows)) - 1, 0)
    return out


def clique_number(rows: Sequence[int]) -> int:
    best = 0

    def expand(size: int, p: int) -> None:
        nonlocal best
        if not p:
            if size > best:
                best = size
            return
        while p:
            if size + p.bit_count() <= best:
                return
            low = p & -p
            p ^= low
            expand(size + 1, p & rows[low.bit_length() - 1])

    expand(0, (1 << len(rows)) - 1)
    return best


def exact_coloring(rows: Sequence[int], lower: int) -> list[int]:
    """Optimal proper colouring by DSATUR-ordered branch and bound.

    ``lower`` is a proven lower bound on the chromatic number (e.g. the
    clique number); the search stops as soon as it is met.  The first
    descent is the plain DSATUR greedy colouring, which seeds the bound.
    """
    n = len(rows)
    if n == 0:
        return []
    color = [-1] * n
    classes = [0] * (n + 1)
    best_color: list[int] = []
    best_k = n + 1
    uncolored = (1 << n) - 1

    def search(used: int, ncolored: int) -> None:
        nonlocal best_k, best_color, uncolored
        if used >= best_k:
            return
        if ncolored == n:
            best_k = used
            best_color = color[:]
            return
        v = -1
        best_sat = best_deg = -1
        m = uncolored
        while m:
            low = m & -m
            m ^= low
            w = low.bit_length() - 1
            row = rows[w]
            sat = 0
            for c in range(used):
                if classes[c] & row:
                    sat += 1
            if sat < best_sat:
                continue
            deg = (row & uncolored).bit_count()
            if sat > best_sat or deg > best_deg:
                v, best_sat, best_deg = w, sat, deg
        bit = 1 << v
        row = rows[v]
        uncolored ^= bit
        for c in range(used):
            if not classes[c] & row:
                classes[c] |= bit
                color[v] = c
                search(used, ncolored + 1)
                classes[c] ^= bit
                if best_k <= lower or used >= best_k:
                    break
        if used + 1 < best_k and best_k > lower:
            classes[used] = bit
            color[v] = used
            search(used + 1, ncolored + 1)
            classes[used] = 0
        color[v] = -1
        uncolored |= bit

    search(0, 0)
    return best_color
