"""Exhaustive sweeps behind ``check-theorem``.

Each sweep returns a RunReport. Sweeps accept a shard ``(i, k)`` and then
only visit generator items whose running index is ``i`` modulo ``k``;
merging the reports of all ``k`` shards gives the same instance and
failure counts as the unsharded run.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import chain
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from .bouquet import Bouquet, intersection_graph, intersection_rows, partial_petrial, path_bouquet, trace_boundaries
from .enumeration import chord_words, double_factorial, labeled_graphs, shard
from .errors import ResourceLimitError
from .gf2 import corank, rank_rows
from .graph import (
    Graft,
    SimpleGraph,
    graft_adjacency,
    graft_lc_delete,
    is_connected,
    is_path,
    path_graph,
)
from .poly import (
    DEFAULT_MAX_N,
    degree,
    is_binomial,
    is_interpolating,
    path_closed_form,
    poly_by_corank,
    poly_by_tracing,
)
from .witness import certify_nonbinomial, check_witness, nonpath_witness, path_witness

__all__ = [
    "RunReport",
    "SCOPES",
    "sweep_paths",
    "sweep_lemma3",
    "sweep_circle",
    "sweep_grafts",
    "random_graft_check",
    "run_scope",
]

SCOPES = ("paths", "circle", "grafts", "lemma3", "all")

Shard = Tuple[int, int]


@dataclass
class RunReport:
    command: str
    instances: int = 0
    failures: int = 0
    first_failure: Optional[str] = None
    elapsed: float = 0.0
    generated: Dict[str, int] = field(default_factory=dict)
    stats: Counter = field(default_factory=Counter)

    def check(self, ok: bool, describe: Callable[[], str]) -> bool:
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = describe()
        return ok

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def merge(self, other: "RunReport") -> "RunReport":
        out = RunReport(self.command if self.command == other.command else f"{self.command}+{other.command}")
        out.instances = self.instances + other.instances
        out.failures = self.failures + other.failures
        out.first_failure = self.first_failure if self.first_failure is not None else other.first_failure
        out.elapsed = self.elapsed + other.elapsed
        out.generated = Counter(self.generated) + Counter(other.generated)
        out.generated = dict(out.generated)
        out.stats = self.stats + other.stats
        return out

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        line = f"{verdict} {self.command}: instances={self.instances} failures={self.failures}"
        if self.first_failure:
            line += f" first_failure={self.first_failure}"
        return line

    def to_json_obj(self) -> dict:
        return {
            "command": self.command,
            "instances": self.instances,
            "failures": self.failures,
            "first_failure": self.first_failure,
            "generated": dict(sorted(self.generated.items())),
            "stats": dict(sorted(self.stats.items())),
        }


def _guard(max_n: int, limit: int) -> None:
    if max_n > limit:
        raise ResourceLimitError(f"max_n = {max_n} exceeds the guard {limit}")


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - t0
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _indexed_words(lo: int, hi: int) -> Iterable[Tuple[int, Tuple[int, ...]]]:
    return chain.from_iterable(((n, w) for w in chord_words(n)) for n in range(lo, hi + 1))


def _count_generated(report: RunReport, key: str, shard_: Shard, got: int, expected: int) -> None:
    report.generated[key] = got
    if shard_ == (0, 1):
        report.check(got == expected, lambda: f"generator {key} produced {got}, expected {expected}")


@_timed
def sweep_paths(max_n: int, shard_: Shard = (0, 1), limit: int = DEFAULT_MAX_N) -> RunReport:
    """Closed form versus both evaluators for paths on ``1..max_n`` vertices."""
    _guard(max_n, limit)
    report = RunReport("paths")
    for n in shard(range(1, max_n + 1), *shard_):
        report.instances += 1
        expected = path_closed_form(n)
        b = path_bouquet(n)
        report.check(is_path(intersection_graph(b)), lambda: f"path_bouquet({n}) intersection graph is not a path")
        by_corank = poly_by_corank(path_graph(n), max_n=limit)
        by_tracing = poly_by_tracing(b, max_n=limit)
        report.check(by_corank == expected, lambda: f"n={n}: corank {by_corank} != closed form {expected}")
        report.check(by_tracing == expected, lambda: f"n={n}: tracing {by_tracing} != closed form {expected}")
        report.check(expected.total() == 2 ** n, lambda: f"n={n}: coefficients do not sum to 2^n")
        report.check(is_binomial(expected), lambda: f"n={n}: closed form is not binomial")
    return report


@_timed
def sweep_lemma3(max_n: int, shard_: Shard = (0, 1), limit: int = DEFAULT_MAX_N) -> RunReport:
    """Boundary count versus corank + 1 over every diagram and twist set.

    Also compares the two evaluators on each untwisted diagram.
    """
    _guard(max_n, limit)
    report = RunReport("lemma3")
    produced = Counter()
    for n, word in shard(_indexed_words(0, max_n), *shard_):
        produced[n] += 1
        b = Bouquet(word)
        g = intersection_graph(b)
        rows = g.dense_rows()
        for mask in range(1 << n):
            twist = [i for i in range(n) if mask >> i & 1]
            f = trace_boundaries(partial_petrial(b, twist))
            k = n - rank_rows([row | (1 << i) if mask >> i & 1 else row for i, row in enumerate(rows)], n)
            report.instances += 1
            report.check(f == k + 1, lambda: f"{b.to_text()} twisted={twist}: f={f}, corank={k}")
        by_tracing = poly_by_tracing(b, max_n=limit)
        by_corank = poly_by_corank(g, max_n=limit)
        report.stats["oracle_pairs"] += 1
        report.check(by_tracing == by_corank, lambda: f"{b.to_text()}: tracing {by_tracing} != corank {by_corank}")
        report.check(by_tracing.total() == 2 ** n, lambda: f"{b.to_text()}: coefficients do not sum to 2^n")
    for n in range(0, max_n + 1):
        _count_generated(report, f"matchings_n{n}", shard_, produced[n], double_factorial(2 * n - 1))
    return report


@_timed
def sweep_circle(max_n: int, shard_: Shard = (0, 1), limit: int = DEFAULT_MAX_N, certify: bool = True) -> RunReport:
    """Binomial exactly for paths, over every connected intersection graph.

    Each distinct labeled intersection graph (keyed by its adjacency
    bitsets) is evaluated once. Alongside the main check: degree equals n,
    no gaps between the lowest and highest degree, every degree 1..n occurs
    exactly for complete graphs, and non-paths receive a verified witness.
    """
    _guard(max_n, limit)
    report = RunReport("circle")
    produced = Counter()
    seen = set()
    for n, word in shard(_indexed_words(1, max_n), *shard_):
        produced[n] += 1
        b = Bouquet(word)
        rows = intersection_rows(b)
        key = (n, tuple(rows))
        if key in seen:
            continue
        seen.add(key)
        g = SimpleGraph._from_adj(dict(enumerate(rows)))
        if not is_connected(g):
            report.stats["disconnected"] += 1
            continue
        report.instances += 1
        p = poly_by_corank(g, max_n=limit)
        path = is_path(g)
        complete = all(row.bit_count() == n - 1 for row in rows)
        where = lambda: f"{b.to_text()} edges={g.edges()} poly={p}"
        report.stats["paths" if path else "non_paths"] += 1
        report.check(p.total() == 2 ** n, lambda: f"coefficient sum != 2^n for {where()}")
        report.check(is_binomial(p) == path, lambda: f"binomial={is_binomial(p)} path={path} for {where()}")
        report.check(degree(p) == n, lambda: f"degree {degree(p)} != {n} for {where()}")
        report.check(is_interpolating(p), lambda: f"not interpolating for {where()}")
        spread = all(p[d] for d in range(1, n + 1))
        report.check(spread == complete, lambda: f"spread={spread} complete={complete} for {where()}")
        if certify and not path:
            k, cert = certify_nonbinomial(g)
            report.check(len(p.terms) >= 3, lambda: f"witness corank {k} but only {len(p.terms)} terms for {where()}")
    for n in range(1, max_n + 1):
        _count_generated(report, f"matchings_n{n}", shard_, produced[n], double_factorial(2 * n - 1))
    return report


def random_graft_check(report: RunReport, count: int, max_vertices: int, seed: int, shard_: Shard = (0, 1)) -> None:
    """Corank before and after one deletion at a random marked vertex."""
    rng = random.Random(seed)
    for idx in range(count):
        n = rng.randint(1, max_vertices)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        marks = {v for v in range(n) if rng.random() < 0.5}
        v = rng.randrange(n)
        marks.add(v)
        if idx % shard_[1] != shard_[0]:
            continue
        gr = Graft(SimpleGraph(range(n), edges), frozenset(marks))
        before = corank(graft_adjacency(gr))
        after = corank(graft_adjacency(graft_lc_delete(gr, v)))
        report.instances += 1
        report.stats["random_grafts"] += 1
        report.check(before == after, lambda: f"corank {before} -> {after} deleting {v} from {gr}")


@_timed
def sweep_grafts(
    max_n: int,
    shard_: Shard = (0, 1),
    limit: int = DEFAULT_MAX_N,
    random_count: int = 10_000,
    random_max_vertices: int = 12,
    seed: int = 0,
) -> RunReport:
    """Witness certificates for every labeled graph, plus random corank checks."""
    _guard(max_n, limit)
    report = RunReport("grafts")
    produced = Counter()
    stream = chain.from_iterable(((n, g) for g in labeled_graphs(n)) for n in range(1, max_n + 1))
    for n, g in shard(stream, *shard_):
        produced[n] += 1
        report.instances += 1
        if is_path(g):
            cert = path_witness(g)
            report.stats["paths"] += 1
        else:
            if n < 2:
                continue
            cert = nonpath_witness(g)
            report.stats["connected_non_paths" if is_connected(g) else "disconnected"] += 1
        result = check_witness(cert)
        report.check(result.ok, lambda: f"{g!r}: {result.describe()}")
        k = corank(graft_adjacency(cert.initial))
        if cert.kind == "path-witness":
            report.check(k == 1, lambda: f"{g!r}: path witness corank {k} != 1")
        else:
            report.check(k >= 2, lambda: f"{g!r}: non-path witness corank {k} < 2")
    for n in range(1, max_n + 1):
        _count_generated(report, f"graphs_n{n}", shard_, produced[n], 2 ** (n * (n - 1) // 2))
    random_graft_check(report, random_count, random_max_vertices, seed, shard_)
    return report


_SWEEPS = {
    "paths": sweep_paths,
    "lemma3": sweep_lemma3,
    "circle": sweep_circle,
    "grafts": sweep_grafts,
}


def run_scope(scope: str, max_n: int, shard_: Shard = (0, 1), limit: int = DEFAULT_MAX_N) -> List[RunReport]:
    names = list(_SWEEPS) if scope == "all" else [scope]
    return [_SWEEPS[name](max_n, shard_, limit) for name in names]
