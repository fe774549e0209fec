"""Combinatorial planarity test.

A graph is planar iff each of its biconnected blocks is.  Blocks are tested
with the Demoucron-Malgrange-Pertuiset path-addition algorithm: embed a
cycle, then repeatedly embed a path from some fragment (bridge) into a face
that contains all of the fragment's attachment vertices, always serving a
fragment with a single admissible face first.  A fragment with no admissible
face certifies non-planarity.
"""

from __future__ import annotations

from collections import deque

from .graph import Graph


def is_planar(g: Graph) -> bool:
    n, m = len(g), g.edge_count
    if n >= 3 and m > 3 * n - 6:
        return False
    for block in biconnected_blocks(g):
        if len(block) < 9:  # fewer than 9 edges cannot hold K5 or K3,3
            continue
        if not _block_is_planar(block):
            return False
    return True


def biconnected_blocks(g: Graph) -> list[list[tuple[int, int]]]:
    """Edge lists of the biconnected blocks (iterative Hopcroft-Tarjan)."""
    n = len(g)
    disc = [-1] * n
    low = [0] * n
    clock = 0
    blocks: list[list[tuple[int, int]]] = []
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, -1, iter(g.neighbors(root)))]
        edges: list[tuple[int, int]] = []
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if disc[w] == -1:
                    edges.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    break
                if w != parent and disc[w] < disc[v]:
                    edges.append((v, w))
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] >= disc[u]:
                        block = []
                        while True:
                            e = edges.pop()
                            block.append(e)
                            if e == (u, v):
                                break
                        blocks.append(block)
    return blocks


def _block_is_planar(block: list[tuple[int, int]]) -> bool:
    adj: dict[int, set[int]] = {}
    for u, v in block:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    nv, ne = len(adj), len(block)
    if ne > 3 * nv - 6:
        return False

    cycle = _initial_cycle(adj, *block[0])
    placed = set(cycle)
    placed_edges = {frozenset(e) for e in zip(cycle, cycle[1:] + cycle[:1])}
    faces = [list(cycle), list(cycle)]
    face_sets = [set(cycle), set(cycle)]

    while len(placed_edges) < ne:
        best = None
        for attach, path_fn in _fragments(adj, placed, placed_edges):
            admissible = [i for i, fs in enumerate(face_sets) if attach <= fs]
            if not admissible:
                return False
            if best is None or len(admissible) < len(best[0]):
                best = (admissible, path_fn)
                if len(admissible) == 1:
                    break
        admissible, path_fn = best
        path = path_fn()
        fi = admissible[0]
        f1, f2 = _split_face(faces[fi], path)
        faces[fi] = f1
        face_sets[fi] = set(f1)
        faces.append(f2)
        face_sets.append(set(f2))
        placed.update(path)
        placed_edges.update(frozenset(e) for e in zip(path, path[1:]))
    return True


def _initial_cycle(adj: dict[int, set[int]], u: int, v: int) -> list[int]:
    # shortest v -> u path avoiding edge uv closes a cycle
    prev = {v: None}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        if x == u:
            break
        for y in adj[x]:
            if y not in prev and not (x == v and y == u):
                prev[y] = x
                queue.append(y)
    path = []
    x = u
    while x is not None:
        path.append(x)
        x = prev[x]
    return path  # u ... v, closed by edge vu


def _fragments(adj, placed, placed_edges):
    """Yield ``(attachments, path_factory)`` for every fragment."""
    for u in sorted(placed):
        for v in adj[u]:
            if u < v and v in placed and frozenset((u, v)) not in placed_edges:
                yield frozenset((u, v)), (lambda a=u, b=v: [a, b])
    seen: set[int] = set()
    for s in sorted(adj):
        if s in placed or s in seen:
            continue
        comp = {s}
        queue = deque([s])
        attach: set[int] = set()
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y in placed:
                    attach.add(y)
                elif y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        yield frozenset(attach), (lambda c=comp, a=attach: _fragment_path(adj, c, a))


def _fragment_path(adj, comp: set[int], attach: set[int]) -> list[int]:
    a, b = sorted(attach)[:2]
    prev: dict[int, int | None] = {}
    queue = deque()
    for x in sorted(adj[a] & comp):
        prev[x] = None
        queue.append(x)
    while queue:
        x = queue.popleft()
        if b in adj[x]:
            inner = []
            while x is not None:
                inner.append(x)
                x = prev[x]
            return [a] + inner[::-1] + [b]
        for y in adj[x]:
            if y in comp and y not in prev:
                prev[y] = x
                queue.append(y)
    raise AssertionError("fragment of a biconnected block must join two attachments")


def _split_face(face: list[int], path: list[int]) -> tuple[list[int], list[int]]:
    a, b = path[0], path[-1]
    inner = path[1:-1]
    i, j = face.index(a), face.index(b)
    k = len(face)
    seg_ab = [face[(i + t) % k] for t in range((j - i) % k + 1)]
    seg_ba = [face[(j + t) % k] for t in range((i - j) % k + 1)]
    return seg_ab + inner[::-1], seg_ba + inner
