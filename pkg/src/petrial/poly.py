"""Partial Petrial polynomials.

Two independent evaluators are provided. ``poly_by_tracing`` twists every
subset of loops of a bouquet and traces the boundary of each resulting
surface. ``poly_by_corank`` works on the intersection graph alone: the
twisted loops become diagonal marks of the GF(2) adjacency matrix, the
number of boundary components is ``corank + 1``, and so the Euler genus of
each partial Petrial is ``n - corank``.

Subsets are enumerated as a binary counter whose low bit is the first
loop/vertex. Either evaluator can be restricted to a contiguous range of
that counter, and per-range counts merge by addition to exactly the
full-range result.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .bouquet import Bouquet, partial_petrial, trace_boundaries
from .errors import InternalInvariantError, InvalidInputError, ResourceLimitError
from .gf2 import rank_rows
from .graph import SimpleGraph

__all__ = [
    "DEFAULT_MAX_N",
    "PetrialPolynomial",
    "poly_by_tracing",
    "poly_by_corank",
    "path_closed_form",
    "is_binomial",
    "is_interpolating",
    "degree",
    "merge_counts",
    "tracing_counts",
    "corank_counts",
]

DEFAULT_MAX_N = 20


@dataclass(frozen=True)
class PetrialPolynomial:
    """Sparse polynomial with positive integer coefficients.

    ``terms`` holds ``(degree, coefficient)`` pairs in increasing degree.
    ``n`` is the number of loops/vertices that generated it, if known; when
    set, the coefficients must sum to ``2**n``.
    """

    terms: Tuple[Tuple[int, int], ...]
    n: Optional[int] = None

    def __post_init__(self):
        terms = tuple(sorted(self.terms))
        object.__setattr__(self, "terms", terms)
        degrees = [d for d, _ in terms]
        if len(set(degrees)) != len(degrees):
            raise InvalidInputError("repeated degree in polynomial terms")
        for d, c in terms:
            if d < 0 or c <= 0:
                raise InvalidInputError(f"invalid term {c}*z^{d}")
        if self.n is not None and sum(c for _, c in terms) != 2 ** self.n:
            raise InvalidInputError(f"coefficients sum to {self.total()}, expected 2^{self.n}")

    @classmethod
    def from_counts(cls, counts: Mapping[int, int], n: Optional[int] = None) -> "PetrialPolynomial":
        return cls(tuple((d, c) for d, c in counts.items() if c), n)

    def coeffs(self) -> Dict[int, int]:
        return dict(self.terms)

    def __getitem__(self, d: int) -> int:
        return self.coeffs().get(d, 0)

    def degrees(self) -> Tuple[int, ...]:
        return tuple(d for d, _ in self.terms)

    def total(self) -> int:
        return sum(c for _, c in self.terms)

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for d, c in self.terms:
            if d == 0:
                parts.append(str(c))
            else:
                mono = "z" if d == 1 else f"z^{d}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)

    def to_json_obj(self) -> dict:
        obj = {str(d): str(c) for d, c in self.terms}
        obj["n"] = self.n
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "PetrialPolynomial":
        n = obj.get("n")
        return cls(tuple((int(k), int(v)) for k, v in obj.items() if k != "n"), n)


def _guard(n: int, max_n: int) -> None:
    if n > max_n:
        raise ResourceLimitError(f"n = {n} exceeds the enumeration guard {max_n} (2^{n} subsets)")


def _check_range(n: int, start: int, stop: Optional[int]) -> Tuple[int, int]:
    total = 1 << n
    stop = total if stop is None else stop
    if not 0 <= start <= stop <= total:
        raise InvalidInputError(f"subset range [{start}, {stop}) outside [0, {total})")
    return start, stop


def tracing_counts(b: Bouquet, start: int = 0, stop: Optional[int] = None) -> Counter:
    """Genus counts over twist subsets ``start <= A < stop`` (as bitmasks)."""
    n = b.n
    start, stop = _check_range(n, start, stop)
    counts: Counter = Counter()
    for mask in range(start, stop):
        a = [i for i in range(n) if mask >> i & 1]
        f = trace_boundaries(partial_petrial(b, a))
        # v = c = 1, e = n: genus = 2 - (1 - n + f)
        counts[1 + n - f] += 1
    return counts


def corank_counts(rows, n: int, start: int = 0, stop: Optional[int] = None) -> Counter:
    """``n - corank`` counts over diagonal mark sets ``start <= D < stop``.

    ``rows`` are the dense adjacency bitmasks of a simple graph.
    """
    start, stop = _check_range(n, start, stop)
    counts: Counter = Counter()
    rows = list(rows)
    bits = [1 << i for i in range(n)]
    for mask in range(start, stop):
        marked = [row | bit if mask & bit else row for row, bit in zip(rows, bits)]
        counts[rank_rows(marked, n)] += 1  # n - corank == rank
    return counts


def merge_counts(parts: Iterable[Mapping[int, int]]) -> Counter:
    total: Counter = Counter()
    for part in parts:
        total.update(part)
    return total


def _chunks(n: int, jobs: int):
    total = 1 << n
    step = -(-total // jobs)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _tracing_task(args):
    b, lo, hi = args
    return tracing_counts(b, lo, hi)


def _corank_task(args):
    rows, n, lo, hi = args
    return corank_counts(rows, n, lo, hi)


def poly_by_tracing(b: Bouquet, max_n: int = DEFAULT_MAX_N, jobs: int = 1) -> PetrialPolynomial:
    _guard(b.n, max_n)
    if jobs <= 1:
        counts = tracing_counts(b)
    else:
        with ProcessPoolExecutor(jobs) as pool:
            counts = merge_counts(pool.map(_tracing_task, [(b, lo, hi) for lo, hi in _chunks(b.n, jobs)]))
    return PetrialPolynomial.from_counts(counts, b.n)


def poly_by_corank(g: SimpleGraph, max_n: int = DEFAULT_MAX_N, jobs: int = 1) -> PetrialPolynomial:
    """Sum of ``z^(n - corank A(g, D))`` over all vertex subsets ``D``."""
    n = len(g)
    _guard(n, max_n)
    rows = g.dense_rows()
    if jobs <= 1:
        counts = corank_counts(rows, n)
    else:
        with ProcessPoolExecutor(jobs) as pool:
            counts = merge_counts(pool.map(_corank_task, [(rows, n, lo, hi) for lo, hi in _chunks(n, jobs)]))
    return PetrialPolynomial.from_counts(counts, n)


def path_closed_form(n: int) -> PetrialPolynomial:
    if not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"path_closed_form needs n >= 1, got {n!r}")
    sign = 1 if n % 2 == 0 else -1
    low, r1 = divmod(2 ** n - sign, 3)
    high, r2 = divmod(2 ** (n + 1) + sign, 3)
    if r1 or r2:
        raise InternalInvariantError(f"closed form is not integral at n = {n}")
    return PetrialPolynomial(((n - 1, low), (n, high)), n)


def is_binomial(p: PetrialPolynomial) -> bool:
    return len(p.terms) == 2


def _nonzero(p: PetrialPolynomial) -> None:
    if not p.terms:
        raise InvalidInputError("the zero polynomial has no degree")


def is_interpolating(p: PetrialPolynomial) -> bool:
    _nonzero(p)
    lo, hi = p.terms[0][0], p.terms[-1][0]
    return len(p.terms) == hi - lo + 1


def degree(p: PetrialPolynomial) -> int:
    _nonzero(p)
    return p.terms[-1][0]
