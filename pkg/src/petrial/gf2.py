"""Square matrices over GF(2) with rows packed into Python ints.

Bit ``j`` of ``rows[i]`` is the ``(i, j)`` entry. Python ints have no width
limit, so a single code path covers every dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

__all__ = ["GF2Matrix", "rank", "corank", "rank_rows"]


@dataclass(frozen=True)
class GF2Matrix:
    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"dimension must be nonnegative, got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        limit = 1 << self.n
        for i, row in enumerate(self.rows):
            if row < 0 or row >= limit:
                raise ValueError(f"row {i} has bits outside 0..{self.n - 1}")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "GF2Matrix":
        n = len(entries)
        rows = []
        for i, entry in enumerate(entries):
            if len(entry) != n:
                raise ValueError(f"row {i} has length {len(entry)}, expected {n}")
            row = 0
            for j, x in enumerate(entry):
                if x & 1:
                    row |= 1 << j
            rows.append(row)
        return cls(n, tuple(rows))

    @classmethod
    def zeros(cls, n: int) -> "GF2Matrix":
        return cls(n, (0,) * n)

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def ones(cls, n: int) -> "GF2Matrix":
        full = (1 << n) - 1
        return cls(n, (full,) * n)

    def __getitem__(self, ij):
        i, j = ij
        return (self.rows[i] >> j) & 1

    def to_lists(self):
        return [[(row >> j) & 1 for j in range(self.n)] for row in self.rows]

    def transpose(self) -> "GF2Matrix":
        cols = [0] * self.n
        for i, row in enumerate(self.rows):
            j = 0
            while row:
                if row & 1:
                    cols[j] |= 1 << i
                row >>= 1
                j += 1
        return GF2Matrix(self.n, tuple(cols))

    def is_symmetric(self) -> bool:
        return self == self.transpose()


def rank_rows(rows: Iterable[int], ncols: int) -> int:
    """Rank of the 0/1 matrix whose rows are the given bitmasks.

    Columns are scanned in increasing order; the pivot is the first
    remaining row (top-down) with a 1 in that column.
    """
    work = list(rows)
    nrows = len(work)
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        bit = 1 << col
        i = r
        while i < nrows and not work[i] & bit:
            i += 1
        if i == nrows:
            continue
        pivot = work[i]
        work[i] = work[r]
        work[r] = pivot
        for j in range(r + 1, nrows):
            if work[j] & bit:
                work[j] ^= pivot
        r += 1
    return r


def rank(m: GF2Matrix) -> int:
    return rank_rows(m.rows, m.n)


def corank(m: GF2Matrix) -> int:
    return m.n - rank_rows(m.rows, m.n)
