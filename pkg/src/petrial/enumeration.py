"""Exhaustive generators for chord diagrams and labeled graphs."""

from __future__ import annotations

from itertools import combinations, islice
from typing import Iterable, Iterator, List, Tuple, TypeVar

from .errors import InvalidInputError
from .graph import SimpleGraph

T = TypeVar("T")

__all__ = [
    "double_factorial",
    "perfect_matchings",
    "chord_words",
    "labeled_graphs",
    "parse_shard",
    "shard",
]


def double_factorial(k: int) -> int:
    """``k!!``, with ``(-1)!! == 0!! == 1``."""
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def perfect_matchings(points: int) -> Iterator[Tuple[Tuple[int, int], ...]]:
    """All perfect matchings of ``0..points-1``.

    The lowest unmatched point is paired with each candidate partner in
    increasing order, so the sequence is canonical.
    """
    if points % 2:
        raise InvalidInputError("perfect matchings need an even number of points")

    def rec(free: List[int]):
        if not free:
            yield ()
            return
        a = free[0]
        for i in range(1, len(free)):
            rest = free[1:i] + free[i + 1:]
            for tail in rec(rest):
                yield ((a, free[i]),) + tail

    yield from rec(list(range(points)))


def chord_words(n: int) -> Iterator[Tuple[int, ...]]:
    """Double occurrence words for every matching of ``2n`` slots.

    Loop ids are assigned in order of first occurrence. The order follows
    ``perfect_matchings``.
    """
    size = 2 * n
    word = [0] * size

    def rec(free: List[int], label: int):
        if not free:
            yield tuple(word)
            return
        a = free[0]
        word[a] = label
        for i in range(1, len(free)):
            word[free[i]] = label
            yield from rec(free[1:i] + free[i + 1:], label + 1)

    yield from rec(list(range(size)), 0)


def labeled_graphs(n: int) -> Iterator[SimpleGraph]:
    """Every simple graph on vertices ``0..n-1``; ``2**(n(n-1)/2)`` of them.

    Bit ``k`` of the counter selects the ``k``-th pair in lexicographic order.
    """
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(range(n), [p for k, p in enumerate(pairs) if mask >> k & 1])


def parse_shard(text: str) -> Tuple[int, int]:
    """Parse ``i/k`` with ``0 <= i < k``."""
    try:
        i, k = (int(x) for x in text.split("/"))
    except ValueError:
        raise InvalidInputError(f"shard must look like i/k, got {text!r}") from None
    if k < 1 or not 0 <= i < k:
        raise InvalidInputError(f"shard index must satisfy 0 <= i < k, got {text!r}")
    return i, k


def shard(items: Iterable[T], index: int, count: int) -> Iterator[T]:
    """Items whose position is congruent to ``index`` modulo ``count``."""
    return islice(items, index, None, count)
