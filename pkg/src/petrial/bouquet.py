"""One-vertex ribbon graphs encoded as signed chord diagrams.

A bouquet with ``n`` loops is a cyclic word of length ``2n`` in which every
loop id ``0..n-1`` occurs twice, read around the boundary of the single
vertex disc, plus the set of twisted (non-orientable) loops. Loop ids are
numbered in order of first occurrence; the original text labels are kept
in ``names`` for display.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import InvalidInputError, ParseError
from .graph import SimpleGraph

__all__ = [
    "Bouquet",
    "BouquetStats",
    "partial_petrial",
    "trace_boundaries",
    "boundary_cycles",
    "stats",
    "interlaced",
    "intersection_graph",
    "intersection_rows",
    "path_bouquet",
    "parse_cdf_line",
    "parse_cdf",
]


@dataclass(frozen=True)
class Bouquet:
    word: Tuple[int, ...]
    twisted: FrozenSet[int] = frozenset()
    names: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "twisted", frozenset(self.twisted))
        if len(word) % 2:
            raise InvalidInputError(f"word has odd length {len(word)}")
        n = len(word) // 2
        counts = [0] * n
        for x in word:
            if not isinstance(x, int) or not 0 <= x < n:
                raise InvalidInputError(f"loop id {x!r} outside 0..{n - 1}")
            counts[x] += 1
        bad = [i for i, c in enumerate(counts) if c != 2]
        if bad:
            raise InvalidInputError(f"loop {self.name(bad[0])} occurs {counts[bad[0]]} times, expected 2")
        stray = [x for x in self.twisted if not 0 <= x < n]
        if stray:
            raise InvalidInputError(f"twisted loops {sorted(stray)} are not in the word")
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != n or len(set(names)) != n:
                raise InvalidInputError("names must give one distinct label per loop")
            object.__setattr__(self, "names", names)

    @property
    def n(self) -> int:
        return len(self.word) // 2

    def name(self, loop: int) -> str:
        if self.names is not None and 0 <= loop < len(self.names):
            return self.names[loop]
        return str(loop + 1)

    def ids(self, labels: Iterable[str]) -> FrozenSet[int]:
        """Translate text labels to loop ids."""
        lookup = {self.name(i): i for i in range(self.n)}
        out = set()
        for lab in labels:
            if lab not in lookup:
                raise InvalidInputError(f"unknown loop label {lab!r}")
            out.add(lookup[lab])
        return frozenset(out)

    def slots(self) -> List[Tuple[int, int]]:
        """For each loop id, its two slot positions in increasing order."""
        pos: List[List[int]] = [[] for _ in range(self.n)]
        for p, x in enumerate(self.word):
            pos[x].append(p)
        return [(a, b) for a, b in pos]

    def to_text(self) -> str:
        text = " ".join(self.name(x) for x in self.word)
        if self.twisted:
            text += " | " + " ".join(self.name(x) for x in sorted(self.twisted))
        return text

    @classmethod
    def from_matching(cls, pairs: Sequence[Tuple[int, int]], twisted: Iterable[int] = ()) -> "Bouquet":
        """Build from a perfect matching of slots ``0..2n-1``.

        Loop ids follow the order of each pair's first slot, which keeps
        the word canonical; ``twisted`` refers to those ids.
        """
        size = 2 * len(pairs)
        word = [-1] * size
        for k, (a, b) in enumerate(sorted((min(p), max(p)) for p in pairs)):
            word[a] = word[b] = k
        return cls(tuple(word), frozenset(twisted))


@dataclass(frozen=True)
class BouquetStats:
    v: int
    e: int
    f: int
    c: int
    chi: int
    genus: int


def partial_petrial(b: Bouquet, a: Iterable[int]) -> Bouquet:
    """Half-twist every loop in ``a``; twisting a twisted loop untwists it."""
    a = frozenset(a)
    stray = [x for x in a if not (isinstance(x, int) and 0 <= x < b.n)]
    if stray:
        raise InvalidInputError(f"unknown loops {stray!r}")
    return Bouquet(b.word, b.twisted ^ a, b.names)


def _side_partner(b: Bouquet) -> List[int]:
    # Slot p splits into points 2p (before) and 2p+1 (after).
    side = [0] * (4 * b.n)
    for loop, (a, c) in enumerate(b.slots()):
        if loop in b.twisted:
            pairs = ((2 * a, 2 * c), (2 * a + 1, 2 * c + 1))
        else:
            pairs = ((2 * a, 2 * c + 1), (2 * a + 1, 2 * c))
        for x, y in pairs:
            side[x] = y
            side[y] = x
    return side


def boundary_cycles(b: Bouquet) -> List[List[int]]:
    """Boundary components as cyclic sequences of split-point ids.

    Each cycle alternates a vertex arc (``2p+1`` to ``2q`` with ``q = p+1``
    cyclically) and a ribbon side. Cycles start at their smallest point.
    """
    size = 4 * b.n
    if size == 0:
        return [[]]
    side = _side_partner(b)
    seen = [False] * size
    cycles = []
    for start in range(size):
        if seen[start]:
            continue
        cycle = []
        x = start
        # Alternate arc and side steps; the arc from x depends on parity.
        while True:
            seen[x] = True
            cycle.append(x)
            y = (x + 1) % size if x & 1 else (x - 1) % size
            seen[y] = True
            cycle.append(y)
            x = side[y]
            if x == start:
                break
        cycles.append(cycle)
    return cycles


def trace_boundaries(b: Bouquet) -> int:
    """Number of boundary components of the ribbon surface."""
    size = 4 * b.n
    if size == 0:
        return 1
    side = _side_partner(b)
    seen = bytearray(size)
    count = 0
    for start in range(size):
        if seen[start]:
            continue
        count += 1
        x = start
        while True:
            seen[x] = 1
            y = (x + 1) % size if x & 1 else (x - 1) % size
            seen[y] = 1
            x = side[y]
            if x == start:
                break
    return count


def stats(b: Bouquet) -> BouquetStats:
    f = trace_boundaries(b)
    v, e, c = 1, b.n, 1
    chi = v - e + f
    return BouquetStats(v=v, e=e, f=f, c=c, chi=chi, genus=2 * c - chi)


def interlaced(b: Bouquet, e1: int, e2: int) -> bool:
    """True if the ends of ``e1`` and ``e2`` alternate around the vertex."""
    n = b.n
    for x in (e1, e2):
        if not (isinstance(x, int) and 0 <= x < n):
            raise InvalidInputError(f"unknown loop {x!r}")
    if e1 == e2:
        raise InvalidInputError("a loop is not interlaced with itself")
    slots = b.slots()
    a1, b1 = slots[e1]
    a2, b2 = slots[e2]
    return (a1 < a2 < b1) != (a1 < b2 < b1)


def intersection_rows(b: Bouquet) -> List[int]:
    """Interlacement bitmask of every loop, in loop-id order.

    Scanning the word once: a loop interlaces exactly those loops that were
    opened but not yet closed an odd number of times inside its span,
    which is an XOR prefix computation.
    """
    n = b.n
    rows = [0] * n
    prefix = [0] * (2 * n + 1)
    acc = 0
    for p, x in enumerate(b.word):
        acc ^= 1 << x
        prefix[p + 1] = acc
    for x, (a, c) in enumerate(b.slots()):
        # loops seen an odd number of times strictly between a and c
        rows[x] = (prefix[c] ^ prefix[a + 1]) & ~(1 << x)
    return rows


def intersection_graph(b: Bouquet) -> SimpleGraph:
    rows = intersection_rows(b)
    edges = [(i, j) for i, row in enumerate(rows) for j in range(i + 1, b.n) if row >> j & 1]
    return SimpleGraph(range(b.n), edges)


def path_bouquet(n: int) -> Bouquet:
    """Untwisted bouquet whose intersection graph is the path 0-1-...-(n-1)."""
    if n < 1:
        raise InvalidInputError("path_bouquet needs n >= 1")
    word = [0]
    for i in range(1, n):
        word += [i, i - 1]
    word.append(n - 1)
    return Bouquet(tuple(word))


_TOKEN = re.compile(r"\S+")


def parse_cdf_line(line: str, lineno: Optional[int] = None) -> Bouquet:
    """Parse ``<word> [| <twisted>]``; labels are arbitrary tokens."""
    body = line.split("#", 1)[0]
    if body.count("|") > 1:
        raise ParseError("more than one '|' separator", line=lineno, column=body.index("|", body.index("|") + 1) + 1)
    word_part, bar, twist_part = body.partition("|")
    offset = len(word_part) + len(bar)
    ids = {}
    names = []
    word = []
    for m in _TOKEN.finditer(word_part):
        tok = m.group()
        if tok not in ids:
            ids[tok] = len(names)
            names.append(tok)
        word.append(ids[tok])
    if not word:
        raise ParseError("empty word", line=lineno, column=1)
    counts = {}
    for m in _TOKEN.finditer(word_part):
        counts[m.group()] = counts.get(m.group(), 0) + 1
        if counts[m.group()] > 2:
            raise ParseError("label occurs more than twice", line=lineno, column=m.start() + 1, token=m.group())
    for m in _TOKEN.finditer(word_part):
        if counts[m.group()] != 2:
            raise ParseError("label occurs only once", line=lineno, column=m.start() + 1, token=m.group())
    twisted = set()
    for m in _TOKEN.finditer(twist_part):
        tok = m.group()
        if tok not in ids:
            raise ParseError("twisted label is not in the word", line=lineno, column=offset + m.start() + 1, token=tok)
        twisted.add(ids[tok])
    return Bouquet(tuple(word), frozenset(twisted), tuple(names))


def parse_cdf(text: str) -> List[Bouquet]:
    """Parse a chord-diagram file: one bouquet per non-empty, non-comment line."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.split("#", 1)[0].strip():
            out.append(parse_cdf_line(raw, lineno))
    return out
