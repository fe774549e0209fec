"""Time the compiled kernels against the pure-Python ones on seeded random graphs.

    python benchmarks/bench_kernels.py [--n 40] [--p 0.5] [--count 5] [--repeat 3]

Both backends must agree on every output; a mismatch aborts the run.
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit

from cliquereconf import _pykernels, kernels
from cliquereconf.graph import Graph


def random_rows(n: int, p: float, rng: random.Random) -> list[int]:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return list(Graph.from_edges(n, edges).rows)


def cases(n: int):
    yield "k_cliques(k=4)", lambda m, rows: m.k_cliques(rows, 4)
    yield "count_k_cliques(k=5)", lambda m, rows: m.count_k_cliques(rows, 5)
    yield "maximal_cliques", lambda m, rows: m.maximal_cliques(rows)
    yield "clique_number", lambda m, rows: m.clique_number(rows)
    if n <= 24:
        yield "exact_coloring", lambda m, rows: m.exact_coloring(rows, 1)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=40)
    ap.add_argument("--p", type=float, default=0.5)
    ap.add_argument("--count", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    compiled = kernels._ckernels
    if compiled is None:
        print("compiled extension not available; build with `pip install -e . --no-build-isolation`")
        return 1
    if args.n > kernels.COMPILED_MAX_VERTICES:
        print(f"--n must be at most {kernels.COMPILED_MAX_VERTICES}")
        return 2

    rng = random.Random(args.seed)
    graphs = [random_rows(args.n, args.p, rng) for _ in range(args.count)]
    print(f"{args.count} graphs, n={args.n}, p={args.p}, seed={args.seed}, best of {args.repeat}")
    print(f"{'kernel':<22}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, fn in cases(args.n):
        for rows in graphs:
            if fn(_pykernels, rows) != fn(compiled, rows):
                print(f"backends disagree on {name}", file=sys.stderr)
                return 1
        t_py = min(timeit.repeat(lambda: [fn(_pykernels, r) for r in graphs], number=1, repeat=args.repeat))
        t_c = min(timeit.repeat(lambda: [fn(compiled, r) for r in graphs], number=1, repeat=args.repeat))
        print(f"{name:<22}{t_py:>12.4f}{t_c:>12.4f}{t_py / max(t_c, 1e-9):>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
