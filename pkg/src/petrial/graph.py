"""Simple graphs, grafts and local complementation.

Vertices are small nonnegative integers that keep their names across
deletions, so a deletion sequence recorded against the original graph can
be replayed later. Adjacency is stored as one bitmask per vertex, indexed by
vertex id.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple

from .errors import InvalidInputError, ParseError, PreconditionError
from .gf2 import GF2Matrix

__all__ = [
    "SimpleGraph",
    "Graft",
    "GraphClass",
    "neighbours",
    "local_complement",
    "local_complement_delete",
    "graft_lc_delete",
    "graft_adjacency",
    "is_connected",
    "is_path",
    "is_cycle",
    "is_tree",
    "components",
    "structure_classify",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "empty_graph",
    "star_graph",
    "parse_edge_list",
    "format_edge_list",
    "parse_marks",
]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SimpleGraph:
    """Undirected loopless graph on a set of integer vertex ids.

    Instances are immutable; every operation returns a new graph.
    """

    __slots__ = ("_adj", "_vertices", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Tuple[int, int]] = ()):
        adj: Dict[int, int] = {}
        for v in vertices:
            if not isinstance(v, int) or v < 0:
                raise InvalidInputError(f"vertex ids must be nonnegative ints, got {v!r}")
            adj[v] = 0
        for u, v in edges:
            if u not in adj or v not in adj:
                raise InvalidInputError(f"edge ({u}, {v}) uses an unknown vertex")
            if u == v:
                raise InvalidInputError(f"loop at vertex {u} is not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._set(adj)

    def _set(self, adj: Dict[int, int]) -> None:
        self._adj = adj
        self._vertices = tuple(sorted(adj))
        self._hash = None

    @classmethod
    def _from_adj(cls, adj: Dict[int, int]) -> "SimpleGraph":
        g = cls.__new__(cls)
        g._set(adj)
        return g

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self._vertices

    @property
    def vertex_mask(self) -> int:
        mask = 0
        for v in self._vertices:
            mask |= 1 << v
        return mask

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def adjacency_mask(self, v: int) -> int:
        """Neighbourhood of ``v`` as a bitmask over vertex ids."""
        self._check(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return self.adjacency_mask(v).bit_count()

    def adjacent(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        out = []
        for u in self._vertices:
            for v in _bits(self._adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self._adj.values()) // 2

    def induced_subgraph(self, keep: Iterable[int]) -> "SimpleGraph":
        keep = set(keep)
        for v in keep:
            self._check(v)
        mask = 0
        for v in keep:
            mask |= 1 << v
        return SimpleGraph._from_adj({v: self._adj[v] & mask for v in keep})

    def delete_vertex(self, v: int) -> "SimpleGraph":
        self._check(v)
        clear = ~(1 << v)
        return SimpleGraph._from_adj({u: m & clear for u, m in self._adj.items() if u != v})

    def dense_rows(self) -> List[int]:
        """Adjacency rows relabelled to positions ``0..n-1`` in vertex order."""
        if self._vertices == tuple(range(len(self._vertices))):
            return [self._adj[v] for v in self._vertices]
        pos = {v: i for i, v in enumerate(self._vertices)}
        rows = []
        for v in self._vertices:
            row = 0
            for u in _bits(self._adj[v]):
                row |= 1 << pos[u]
            rows.append(row)
        return rows

    def _check(self, v) -> None:
        if v not in self._adj:
            raise InvalidInputError(f"unknown vertex {v!r}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._adj.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"SimpleGraph(vertices={list(self._vertices)}, edges={self.edges()})"


@dataclass(frozen=True)
class Graft:
    """A simple graph together with a set of marked vertices."""

    graph: SimpleGraph
    marks: FrozenSet[int] = frozenset()

    def __post_init__(self):
        marks = frozenset(self.marks)
        object.__setattr__(self, "marks", marks)
        stray = [v for v in marks if v not in self.graph]
        if stray:
            raise InvalidInputError(f"marks {sorted(stray)} are not vertices of the graph")

    def isolated_unmarked(self) -> List[int]:
        g = self.graph
        return [v for v in g.vertices if not g.adjacency_mask(v) and v not in self.marks]


class GraphClass(str, enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    TREE_WITH_BRANCH = "tree-with-branch"
    NON_TREE_NON_CYCLE = "non-tree-non-cycle"
    DISCONNECTED = "disconnected"


def neighbours(g: SimpleGraph, v: int) -> FrozenSet[int]:
    return frozenset(_bits(g.adjacency_mask(v)))


def local_complement(g: SimpleGraph, v: int) -> SimpleGraph:
    """Complement the subgraph induced on the neighbourhood of ``v``."""
    nbhd = g.adjacency_mask(v)
    adj = dict(g._adj)
    for u in _bits(nbhd):
        adj[u] ^= nbhd & ~(1 << u)
    return SimpleGraph._from_adj(adj)


def local_complement_delete(g: SimpleGraph, v: int) -> SimpleGraph:
    nbhd = g.adjacency_mask(v)
    clear = ~(1 << v)
    adj = {}
    for u, m in g._adj.items():
        if u == v:
            continue
        if nbhd >> u & 1:
            m ^= nbhd & ~(1 << u)
        adj[u] = m & clear
    return SimpleGraph._from_adj(adj)


def graft_lc_delete(gr: Graft, v: int) -> Graft:
    """Local complementation deletion at a marked vertex.

    The marks become ``(L - {v}) ^ N(v)``. Raises PreconditionError when
    ``v`` is not marked, since the corank identity depends on it.
    """
    if v not in gr.graph:
        raise InvalidInputError(f"unknown vertex {v!r}")
    if v not in gr.marks:
        raise PreconditionError(f"vertex {v} is not marked; deletion requires a marked vertex")
    nbhd = neighbours(gr.graph, v)
    return Graft(local_complement_delete(gr.graph, v), (gr.marks - {v}) ^ nbhd)


def graft_adjacency(gr: Graft) -> GF2Matrix:
    g = gr.graph
    rows = g.dense_rows()
    for i, v in enumerate(g.vertices):
        if v in gr.marks:
            rows[i] |= 1 << i
    return GF2Matrix(len(rows), tuple(rows))


def components(g: SimpleGraph) -> List[Tuple[int, ...]]:
    """Connected components, each sorted, ordered by smallest vertex id."""
    seen = 0
    out = []
    for v in g.vertices:
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in _bits(frontier):
                nxt |= g._adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(tuple(_bits(comp)))
    return out


def is_connected(g: SimpleGraph) -> bool:
    # The empty graph has zero components and is not connected.
    return len(components(g)) == 1


def _degree_counts(g: SimpleGraph) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    for m in g._adj.values():
        d = m.bit_count()
        counts[d] = counts.get(d, 0) + 1
    return counts


def is_tree(g: SimpleGraph) -> bool:
    return is_connected(g) and g.num_edges() == len(g) - 1


def is_path(g: SimpleGraph) -> bool:
    n = len(g)
    if n == 0:
        return False
    if n == 1:
        return True
    if not is_tree(g):
        return False
    counts = _degree_counts(g)
    return counts.get(1, 0) == 2 and counts.get(1, 0) + counts.get(2, 0) == n


def is_cycle(g: SimpleGraph) -> bool:
    n = len(g)
    return n >= 3 and is_connected(g) and _degree_counts(g).get(2, 0) == n


def structure_classify(g: SimpleGraph) -> GraphClass:
    if not is_connected(g):
        return GraphClass.DISCONNECTED
    if is_path(g):
        return GraphClass.PATH
    if is_tree(g):
        return GraphClass.TREE_WITH_BRANCH
    if is_cycle(g):
        return GraphClass.CYCLE
    return GraphClass.NON_TREE_NON_CYCLE


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise InvalidInputError("a cycle needs at least 3 vertices")
    return SimpleGraph(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(range(n))


def star_graph(leaves: int) -> SimpleGraph:
    """Vertex 0 joined to vertices ``1..leaves``."""
    return SimpleGraph(range(leaves + 1), [(0, i) for i in range(1, leaves + 1)])


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield lineno, raw, body


def _ints(lineno: int, raw: str, body: str) -> List[int]:
    out = []
    for match in re.finditer(r"\S+", body):
        tok = match.group()
        if not tok.isdigit():
            raise ParseError("expected a nonnegative integer", line=lineno, column=match.start() + 1, token=tok)
        out.append(int(tok))
    return out


def parse_edge_list(text: str) -> SimpleGraph:
    """Parse the ``n m`` header followed by ``m`` lines ``u v``."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("missing 'n m' header")
    lineno, raw, body = lines[0]
    header = _ints(lineno, raw, body)
    if len(header) != 2:
        raise ParseError("header must be 'n m'", line=lineno, column=1)
    n, m = header
    if len(lines) - 1 != m:
        raise ParseError(f"header declares {m} edges but {len(lines) - 1} edge lines follow", line=lineno)
    seen = set()
    edges = []
    for lineno, raw, body in lines[1:]:
        pair = _ints(lineno, raw, body)
        if len(pair) != 2:
            raise ParseError("edge line must be 'u v'", line=lineno, column=1)
        u, v = pair
        for x in (u, v):
            if x >= n:
                raise ParseError(f"vertex {x} out of range 0..{n - 1}", line=lineno, token=str(x))
        if u == v:
            raise ParseError("self-loops are not allowed", line=lineno, token=str(u))
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key[0]} {key[1]}", line=lineno)
        seen.add(key)
        edges.append((u, v))
    return SimpleGraph(range(n), edges)


def format_edge_list(g: SimpleGraph) -> str:
    """Inverse of parse_edge_list for graphs on vertices ``0..n-1``."""
    if g.vertices != tuple(range(len(g))):
        raise InvalidInputError("edge-list format needs vertices 0..n-1")
    edges = g.edges()
    lines = [f"{len(g)} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_marks(text: str, g: SimpleGraph) -> FrozenSet[int]:
    marks = set()
    for lineno, raw, body in _content_lines(text):
        for v in _ints(lineno, raw, body):
            if v not in g:
                raise ParseError(f"mark {v} is not a vertex", line=lineno, token=str(v))
            marks.add(v)
    return frozenset(marks)
