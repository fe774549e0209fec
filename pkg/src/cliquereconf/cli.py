"""``cliquereconf`` command line.

Exit status: 0 success, 1 property violated, 2 usage or input error,
3 timeout (a partial report is still printed).
"""

from __future__ import annotations

import argparse
import json
import queue
import sys
import threading
import time
from dataclasses import dataclass, field
from typing import Callable

from . import analysis
from .cliques import enumerate_k_cliques, maximal_cliques
from .corpus import DEFAULT_P, DEFAULT_SEED, FAMILIES, generate_corpus
from .graph import Graph, GraphError, format_dot, format_edge_list, parse_edge_list
from .reconf import build, build_tj
from .reconstruct import NotKGoodError, reconstruct_ts, verify_reconstruction
from .report import Report

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3

RULES = ("ts", "tj", "tar-lower", "tar-upper", "simplex", "token")
FORMATS = ("edgelist", "dot", "json")


def _with_k(fn):
    def run(g: Graph, k: int | None) -> Report:
        if k is None:
            raise UsageError("this theorem needs --k")
        return fn(g, k)
    return run


def _no_k(fn):
    return lambda g, k: fn(g)


def _triangle_intersections(g: Graph) -> Report:
    w = analysis.clique_number(g)
    if w < 1:
        return Report("triangle-intersections", True, {"triangles": 0})
    return analysis.verify_tj_triangle_intersections(build_tj(g, w))


THEOREMS: dict[str, Callable[[Graph, int | None], Report]] = {
    "omega-formula": _with_k(analysis.verify_omega_formula),
    "sandwich": _with_k(analysis.verify_chromatic_sandwich),
    "diamond-free": _no_k(analysis.verify_diamond_free),
    "triangle-intersections": _no_k(_triangle_intersections),
    "duality": _with_k(analysis.verify_ts_tj_vertex_edge_duality),
    "triangle-bounds": _no_k(analysis.triangle_bounds_check),
    "tj4": _no_k(analysis.tj4_structure_check),
    "ts-planar": _with_k(analysis.ts_planarity_check),
    "median": _no_k(analysis.simplex_median_check),
    "decompose": _with_k(analysis.ts_clique_decomposition_check),
    "reconstruction": _no_k(verify_reconstruction),
}


class UsageError(Exception):
    pass


class Timeout(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    output: str | None = None
    format: str = "json"
    rule: str | None = None
    k: int | None = None
    theorem: str | None = None
    seed: int = DEFAULT_SEED
    family: str | None = None
    n: int | None = None
    count: int = 1
    p: float = DEFAULT_P
    max_vertices: int = 64
    timeout: float | None = None
    jobs: int = 1
    maximal: bool = False
    verify: bool = False
    timing: bool = True

    def validate(self) -> None:
        if self.command == "cliques" and self.format == "dot":
            raise UsageError("cliques supports --format json or edgelist")
        if self.command == "build":
            if self.rule is None:
                raise UsageError("build needs --rule")
            if self.rule != "simplex" and self.k is None:
                raise UsageError(f"rule {self.rule} needs --k")
        if self.command in ("verify", "corpus") and self.theorem is None:
            raise UsageError(f"{self.command} needs --theorem")
        if self.command == "reconstruct" and not self.verify and self.k is None:
            raise UsageError("reconstruct needs --k (or --verify)")
        if self.command == "cliques" and self.maximal == (self.k is not None):
            raise UsageError("cliques needs exactly one of --k or --maximal")
        if self.command == "corpus" and (self.family is None or self.n is None):
            raise UsageError("corpus needs --family and --n")
        if self.command != "corpus" and not self.inputs:
            raise UsageError(f"{self.command} needs --in")
        if self.jobs < 1:
            raise UsageError("--jobs must be positive")


# -- execution helpers -----------------------------------------------------


def _read_graph(path: str, limit: int) -> Graph:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as err:
        raise UsageError(f"cannot read {path}: {err.strerror}") from None
    try:
        g = parse_edge_list(text)
    except GraphError as err:
        raise UsageError(f"{path}: {err}") from None
    if len(g) > limit:
        raise UsageError(f"{path}: {len(g)} vertices exceeds --max-vertices {limit}")
    return g


def _map_ordered(fn, items: list, jobs: int, timeout: float | None) -> tuple[list, bool]:
    """Apply ``fn`` on daemon worker threads; results keep input order.

    On timeout returns what finished (``None`` elsewhere) and ``True``; the
    stragglers are abandoned rather than joined.
    """
    results: list = [None] * len(items)
    done = [False] * len(items)
    todo: queue.Queue = queue.Queue()
    for i in range(len(items)):
        todo.put(i)
    finished = queue.Queue()

    def worker() -> None:
        while True:
            try:
                i = todo.get_nowait()
            except queue.Empty:
                return
            try:
                results[i] = ("ok", fn(items[i]))
            except BaseException as err:  # reported by the caller
                results[i] = ("err", err)
            finished.put(i)

    for _ in range(min(jobs, len(items)) or 1):
        threading.Thread(target=worker, daemon=True).start()
    deadline = None if timeout is None else time.monotonic() + timeout
    remaining = len(items)
    while remaining:
        wait = None if deadline is None else max(0.0, deadline - time.monotonic())
        try:
            i = finished.get(timeout=wait)
        except queue.Empty:
            return [r if d else None for r, d in zip(results, done)], True
        done[i] = True
        remaining -= 1
    return results, False


def _call(fn, timeout: float | None):
    (res,), timed_out = _map_ordered(lambda _: fn(), [None], 1, timeout)
    if timed_out:
        raise Timeout
    kind, value = res
    if kind == "err":
        raise value
    return value


def _report_line(report: Report, source: str, seed: int | None, elapsed: float, timing: bool) -> str:
    doc = {"theorem": report.theorem, "input": source, "pass": report.passed}
    if report.witness is not None:
        doc["witness"] = report.witness
    doc["values"] = report.values
    doc["seed"] = seed
    doc["elapsed_ms"] = round(elapsed * 1000, 3) if timing else 0
    return json.dumps(doc, ensure_ascii=False)


def _timed(fn):
    def run(*args):
        start = time.perf_counter()
        value = fn(*args)
        return value, time.perf_counter() - start
    return run


def _write(cfg: RunConfig, text: str) -> None:
    if cfg.output is None:
        sys.stdout.write(text)
    else:
        with open(cfg.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


# -- commands --------------------------------------------------------------


def _cmd_build(cfg: RunConfig) -> int:
    g = _read_graph(cfg.inputs[0], cfg.max_vertices)
    try:
        t = _call(lambda: build(g, cfg.rule, cfg.k), cfg.timeout)
    except ValueError as err:
        raise UsageError(str(err)) from None
    if cfg.format == "json":
        text = t.to_json()
    elif cfg.format == "dot":
        text = format_dot(t.graph, f"{t.rule.tag.value}_{t.k}")
    else:
        text = format_edge_list(t.graph)
    _write(cfg, text)
    return EXIT_OK


def _cmd_cliques(cfg: RunConfig) -> int:
    g = _read_graph(cfg.inputs[0], cfg.max_vertices)
    if cfg.k is not None and cfg.k < 0:
        raise UsageError("--k must be non-negative")
    found = _call(lambda: maximal_cliques(g) if cfg.maximal else enumerate_k_cliques(g, cfg.k), cfg.timeout)
    if cfg.format == "json":
        doc = {"k": None if cfg.maximal else cfg.k, "maximal": cfg.maximal,
               "cliques": [c.names(g) for c in found]}
        text = json.dumps(doc, separators=(",", ":"), ensure_ascii=False) + "\n"
    else:
        text = "".join(" ".join(c.names(g)) + "\n" for c in found)
    _write(cfg, text)
    return EXIT_OK


def _cmd_reconstruct(cfg: RunConfig) -> int:
    g = _read_graph(cfg.inputs[0], cfg.max_vertices)
    if cfg.verify:
        return _run_reports(cfg, [(cfg.inputs[0], g)], lambda h: verify_reconstruction(h), None)
    try:
        h = _call(lambda: reconstruct_ts(Graph(g.rows), cfg.k), cfg.timeout)
    except NotKGoodError as err:
        witness = {"vertex": g.name(err.vertex), "reason": err.reason,
                   "vertices": [g.name(v) for v in err.witness]}
        print(json.dumps({"k_good": False, "k": cfg.k, "witness": witness}))
        return EXIT_VIOLATION
    except ValueError as err:
        raise UsageError(str(err)) from None
    if cfg.format == "json":
        doc = {"k": cfg.k, "nodes": h.vertex_names(), "edges": [list(e) for e in h.edges()]}
        text = json.dumps(doc, separators=(",", ":"), ensure_ascii=False) + "\n"
    elif cfg.format == "dot":
        text = format_dot(h, "H")
    else:
        text = format_edge_list(h)
    _write(cfg, text)
    return EXIT_OK


def _run_reports(cfg: RunConfig, named: list[tuple[str, Graph]], fn, seed: int | None, header: str = "") -> int:
    """Verify each graph, print one JSON line per graph in input order."""
    timed = _timed(fn)
    results, timed_out = _map_ordered(lambda item: timed(item[1]), named, cfg.jobs, cfg.timeout)
    lines = []
    passed = failed = skipped = 0
    for (source, _), res in zip(named, results):
        if res is None:
            continue
        kind, value = res
        if kind == "err":
            if isinstance(value, UsageError) or not isinstance(value, ValueError):
                raise value
            skipped += 1
            lines.append(json.dumps({"input": source, "pass": None, "skipped": str(value), "seed": seed}))
            continue
        report, elapsed = value
        passed += report.passed
        failed += not report.passed
        lines.append(_report_line(report, source, seed, elapsed, cfg.timing))
    if timed_out:
        lines.append(json.dumps({"timeout": True, "completed": len(lines), "total": len(named)}))
    if cfg.command == "corpus":
        lines.append(f"# passed={passed} failed={failed} skipped={skipped}")
    if len(named) == 1 and skipped and not timed_out:
        # a single input that fails the precondition is a usage problem
        raise UsageError(json.loads(lines[0])["skipped"])
    _write(cfg, header + "".join(line + "\n" for line in lines))
    if timed_out:
        return EXIT_TIMEOUT
    return EXIT_VIOLATION if failed else EXIT_OK


def _cmd_verify(cfg: RunConfig) -> int:
    run = THEOREMS[cfg.theorem]
    named = [(path, _read_graph(path, cfg.max_vertices)) for path in cfg.inputs]
    return _run_reports(cfg, named, lambda g: run(g, cfg.k), None)


def _cmd_corpus(cfg: RunConfig) -> int:
    run = THEOREMS[cfg.theorem]
    if cfg.n > cfg.max_vertices:
        raise UsageError(f"--n {cfg.n} exceeds --max-vertices {cfg.max_vertices}")
    graphs = generate_corpus(cfg.family, cfg.n, cfg.count, cfg.seed, cfg.p)
    header = (f"# corpus family={cfg.family} n={cfg.n} count={cfg.count} seed={cfg.seed} "
              f"p={cfg.p} theorem={cfg.theorem} k={cfg.k}\n")
    named = [(f"{cfg.family}:{cfg.n}:{i}", g) for i, g in enumerate(graphs)]
    return _run_reports(cfg, named, lambda g: run(g, cfg.k), cfg.seed, header)


COMMANDS = {
    "build": _cmd_build,
    "cliques": _cmd_cliques,
    "reconstruct": _cmd_reconstruct,
    "verify": _cmd_verify,
    "corpus": _cmd_corpus,
}


def run(cfg: RunConfig) -> int:
    try:
        cfg.validate()
        return COMMANDS[cfg.command](cfg)
    except UsageError as err:
        print(f"cliquereconf: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except Timeout:
        print(json.dumps({"command": cfg.command, "timeout": True, "limit_s": cfg.timeout}))
        return EXIT_TIMEOUT


# -- argument parsing ------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliquereconf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, needs_input: bool = True) -> None:
        if needs_input:
            p.add_argument("--in", dest="inputs", action="append", default=[], metavar="FILE",
                           help="edge-list file, '-' for stdin (repeatable for verify)")
        p.add_argument("--out", dest="output", metavar="PATH")
        p.add_argument("--max-vertices", type=int, default=64)
        p.add_argument("--timeout", type=float, metavar="SECONDS")

    p = sub.add_parser("build", help="build a reconfiguration graph")
    common(p)
    p.add_argument("--rule", choices=RULES, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=FORMATS, default="json")

    p = sub.add_parser("cliques", help="list k-cliques or maximal cliques")
    common(p)
    p.add_argument("--k", "--size", dest="k", type=int)
    p.add_argument("--maximal", action="store_true")
    p.add_argument("--format", choices=FORMATS, default="json")

    p = sub.add_parser("reconstruct", help="rebuild TS one clique size down from an unlabeled TJ graph")
    common(p)
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--verify", action="store_true",
                   help="treat the input as a base graph and check the round trip")
    p.add_argument("--no-timing", dest="timing", action="store_false")

    p = sub.add_parser("verify", help="check a structural property on input graphs")
    common(p)
    p.add_argument("--theorem", choices=sorted(THEOREMS), required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-timing", dest="timing", action="store_false")

    p = sub.add_parser("corpus", help="check a property over a seeded random corpus")
    common(p, needs_input=False)
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--p", type=float, default=DEFAULT_P)
    p.add_argument("--theorem", choices=sorted(THEOREMS), required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-timing", dest="timing", action="store_false")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    cfg = RunConfig(**{k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__})
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
