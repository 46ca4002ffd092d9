"""Replayable certificates built from grafts and deletion sequences.

A path graft with both leaves marked reduces, by deleting from one leaf
towards the other, to a single unmarked isolated vertex. For a graph that
is not a path, a choice of marks and a deletion sequence reaching at least
two unmarked isolated vertices certifies that the starting graft's
adjacency matrix has corank at least 2, because each deletion at a marked
vertex preserves corank.

The checker replays a certificate from its serialized initial graft and
does not share code with the constructors beyond ``graft_lc_delete``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Sequence, Tuple

from .errors import InternalInvariantError, InvalidInputError, PreconditionError
from .gf2 import corank
from .graph import (
    Graft,
    SimpleGraph,
    components,
    graft_adjacency,
    graft_lc_delete,
    is_connected,
    is_path,
    local_complement_delete,
    neighbours,
)

__all__ = [
    "PATH_WITNESS",
    "NONPATH_WITNESS",
    "WitnessCertificate",
    "WitnessReport",
    "path_witness",
    "nonpath_witness",
    "check_witness",
    "certify_nonbinomial",
    "make_witness",
]

PATH_WITNESS = "path-witness"
NONPATH_WITNESS = "nonpath-witness"


@dataclass(frozen=True)
class WitnessCertificate:
    initial: Graft
    sequence: Tuple[int, ...]
    final: Graft
    kind: str

    def __post_init__(self):
        object.__setattr__(self, "sequence", tuple(self.sequence))
        if self.kind not in (PATH_WITNESS, NONPATH_WITNESS):
            raise InvalidInputError(f"unknown certificate kind {self.kind!r}")

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "initial": _graft_to_obj(self.initial),
            "sequence": list(self.sequence),
            "final": _graft_to_obj(self.final),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json_obj(cls, obj) -> "WitnessCertificate":
        try:
            return cls(
                initial=_graft_from_obj(obj["initial"]),
                sequence=tuple(int(v) for v in obj["sequence"]),
                final=_graft_from_obj(obj["final"]),
                kind=obj["kind"],
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed certificate: {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> "WitnessCertificate":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInputError(f"certificate is not valid JSON: {exc}") from None
        return cls.from_json_obj(obj)


def _graft_to_obj(gr: Graft) -> dict:
    g = gr.graph
    obj = {"n": len(g), "edges": [list(e) for e in g.edges()], "marks": sorted(gr.marks)}
    if g.vertices != tuple(range(len(g))):
        obj["vertices"] = list(g.vertices)
    return obj


def _graft_from_obj(obj) -> Graft:
    n = int(obj["n"])
    vertices = [int(v) for v in obj.get("vertices", range(n))]
    if len(vertices) != n or len(set(vertices)) != n:
        raise ValueError("'vertices' must list n distinct ids")
    edges = []
    for e in obj["edges"]:
        u, v = (int(x) for x in e)
        edges.append((u, v))
    if len({(min(u, v), max(u, v)) for u, v in edges}) != len(edges):
        raise ValueError("duplicate edge")
    return Graft(SimpleGraph(vertices, edges), frozenset(int(v) for v in obj["marks"]))


def _replay(initial: Graft, sequence: Sequence[int]) -> Graft:
    gr = initial
    for v in sequence:
        gr = graft_lc_delete(gr, v)
    return gr


def _path_order(p: SimpleGraph) -> List[int]:
    if len(p) == 1:
        return list(p.vertices)
    start = min(v for v in p.vertices if p.degree(v) == 1)
    order = [start]
    prev = None
    cur = start
    while len(order) < len(p):
        nxt = next(u for u in neighbours(p, cur) if u != prev)
        prev, cur = cur, nxt
        order.append(cur)
    return order


def _path_plan(p: SimpleGraph) -> Tuple[FrozenSet[int], List[int]]:
    order = _path_order(p)
    if len(order) == 1:
        return frozenset(), []
    return frozenset((order[0], order[-1])), order[:-1]


def path_witness(p: SimpleGraph) -> WitnessCertificate:
    """Mark both leaves and delete from the smaller-id leaf to the other end."""
    if not is_path(p):
        raise PreconditionError(f"path_witness needs a path, got {p!r}")
    marks, seq = _path_plan(p)
    initial = Graft(p, marks)
    return WitnessCertificate(initial, tuple(seq), _replay(initial, seq), PATH_WITNESS)


def _nonpath_plan(g: SimpleGraph) -> Tuple[FrozenSet[int], List[int]]:
    comps = components(g)
    if len(comps) > 1:
        marks: FrozenSet[int] = frozenset()
        seq: List[int] = []
        # Only the first two components are needed; the rest stay unmarked.
        for comp in comps[:2]:
            h = g.induced_subgraph(comp)
            sub_marks, sub_seq = _path_plan(h) if is_path(h) else _nonpath_plan(h)
            marks |= sub_marks
            seq += sub_seq
        return marks, seq
    if len(g) <= 3:
        # The only connected non-path on at most 3 vertices is the triangle.
        return frozenset(g.vertices), [g.vertices[0]]
    for u in g.vertices:
        h = local_complement_delete(g, u)
        if is_path(h):
            continue
        sub_marks, sub_seq = _nonpath_plan(h)
        return (sub_marks | {u}) ^ neighbours(g, u), [u] + sub_seq
    raise InternalInvariantError(
        f"no vertex of {g!r} has a non-path local complementation deletion"
    )


def nonpath_witness(g: SimpleGraph) -> WitnessCertificate:
    if len(g) < 2:
        raise PreconditionError("nonpath_witness needs at least two vertices")
    if is_path(g):
        raise PreconditionError(f"nonpath_witness needs a non-path, got {g!r}")
    marks, seq = _nonpath_plan(g)
    initial = Graft(g, marks)
    return WitnessCertificate(initial, tuple(seq), _replay(initial, seq), NONPATH_WITNESS)


def make_witness(g: SimpleGraph) -> WitnessCertificate:
    return path_witness(g) if is_path(g) else nonpath_witness(g)


@dataclass
class WitnessReport:
    ok: bool
    coranks: List[int] = field(default_factory=list)
    failure: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return f"PASS coranks={self.coranks}"
        return f"FAIL {self.failure}"


def check_witness(c: WitnessCertificate) -> WitnessReport:
    """Replay ``c`` step by step; failures are reported, never raised."""
    report = WitnessReport(ok=False)
    gr = c.initial
    if len(set(c.sequence)) != len(c.sequence):
        report.failure = "sequence repeats a vertex"
        return report
    start = corank(graft_adjacency(gr))
    report.coranks.append(start)
    for step, v in enumerate(c.sequence, start=1):
        if v not in gr.graph:
            report.failure = f"step {step}: vertex {v} is not in the current graph"
            return report
        if v not in gr.marks:
            report.failure = f"step {step}: vertex {v} is not marked"
            return report
        gr = graft_lc_delete(gr, v)
        k = corank(graft_adjacency(gr))
        report.coranks.append(k)
        if k != start:
            report.failure = f"step {step}: corank changed from {start} to {k}"
            return report
    if gr != c.final:
        report.failure = "replayed graft differs from the recorded final graft"
        return report
    isolated = gr.isolated_unmarked()
    if c.kind == PATH_WITNESS:
        if len(gr.graph) != 1 or len(isolated) != 1:
            report.failure = "final graft is not a single unmarked isolated vertex"
            return report
    elif len(isolated) < 2:
        report.failure = f"final graft has {len(isolated)} unmarked isolated vertices, need 2"
        return report
    report.ok = True
    return report


def certify_nonbinomial(g: SimpleGraph) -> Tuple[int, WitnessCertificate]:
    """Corank of the witness graft (at least 2) and its certificate."""
    if not is_connected(g):
        raise PreconditionError("certify_nonbinomial needs a connected graph")
    cert = nonpath_witness(g)
    report = check_witness(cert)
    k = corank(graft_adjacency(cert.initial))
    if not report.ok or k < 2:
        raise InternalInvariantError(f"witness for {g!r} failed: {report.describe()}")
    return k, cert
