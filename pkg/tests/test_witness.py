import json

import networkx as nx
import pytest

from petrial.errors import PreconditionError
from petrial.gf2 import corank
from petrial.graph import (
    Graft,
    SimpleGraph,
    complete_graph,
    cycle_graph,
    empty_graph,
    graft_adjacency,
    is_connected,
    is_path,
    local_complement_delete,
    path_graph,
    star_graph,
)
from petrial.witness import (
    NONPATH_WITNESS,
    PATH_WITNESS,
    WitnessCertificate,
    certify_nonbinomial,
    check_witness,
    make_witness,
    nonpath_witness,
    path_witness,
)


def test_path_witness_p1():
    c = path_witness(path_graph(1))
    assert c.initial.marks == frozenset() and c.sequence == ()
    assert c.final == Graft(SimpleGraph([0]))
    assert check_witness(c).ok


def test_path_witness_p2_and_p4():
    c = path_witness(path_graph(2))
    assert c.initial.marks == {0, 1} and c.sequence == (0,)
    assert c.final == Graft(SimpleGraph([1]))
    c = path_witness(path_graph(4))
    assert c.initial.marks == {0, 3} and c.sequence == (0, 1, 2)
    assert c.final == Graft(SimpleGraph([3]))
    assert check_witness(c).ok


def test_path_witness_walks_from_smaller_leaf():
    p = SimpleGraph(range(4), [(2, 0), (0, 3), (3, 1)])
    c = path_witness(p)
    assert c.initial.marks == {1, 2} and c.sequence == (1, 3, 0)
    assert check_witness(c).ok


def test_path_witness_rejects_non_paths():
    with pytest.raises(PreconditionError):
        path_witness(cycle_graph(4))


def test_nonpath_witness_triangle():
    c = nonpath_witness(complete_graph(3))
    assert c.kind == NONPATH_WITNESS
    assert c.initial.marks == {0, 1, 2} and c.sequence == (0,)
    assert c.final == Graft(SimpleGraph([1, 2]))
    report = check_witness(c)
    assert report.ok and report.coranks == [2, 2]


def test_nonpath_witness_two_isolated_vertices():
    c = nonpath_witness(empty_graph(2))
    assert c.initial.marks == frozenset() and c.sequence == ()
    assert check_witness(c).ok


def test_nonpath_witness_c4():
    c = nonpath_witness(cycle_graph(4))
    first = c.sequence[0]
    assert local_complement_delete(cycle_graph(4), first) == SimpleGraph([1, 2, 3], [(1, 2), (2, 3), (1, 3)])
    assert len(c.final.isolated_unmarked()) >= 2
    assert check_witness(c).ok


def test_nonpath_witness_preconditions():
    with pytest.raises(PreconditionError):
        nonpath_witness(path_graph(5))
    with pytest.raises(PreconditionError):
        nonpath_witness(SimpleGraph([0]))


def test_disconnected_uses_first_two_components():
    g = SimpleGraph(range(7), [(0, 1), (2, 3), (3, 4), (2, 4), (5, 6)])
    c = nonpath_witness(g)
    assert c.initial.marks <= {0, 1, 2, 3, 4}
    assert set(c.sequence) <= {0, 1, 2, 3, 4}
    assert check_witness(c).ok


def test_check_witness_passes_p5_with_constant_corank():
    report = check_witness(path_witness(path_graph(5)))
    assert report.ok and report.coranks == [1] * 5


def test_tampered_certificate_fails():
    c = nonpath_witness(complete_graph(3))
    dropped = min(c.initial.marks)
    bad = WitnessCertificate(Graft(c.initial.graph, c.initial.marks - {dropped}), c.sequence, c.final, c.kind)
    report = check_witness(bad)
    assert not report.ok and report.failure.startswith("step 1")

    bad = WitnessCertificate(c.initial, c.sequence, Graft(c.final.graph, {1}), c.kind)
    assert not check_witness(bad).ok
    bad = WitnessCertificate(c.initial, (), c.initial, c.kind)
    assert "unmarked isolated" in check_witness(bad).failure
    bad = WitnessCertificate(c.initial, c.sequence, c.final, PATH_WITNESS)
    assert not check_witness(bad).ok
    bad = WitnessCertificate(c.initial, (0, 0), c.final, c.kind)
    assert not check_witness(bad).ok
    bad = WitnessCertificate(c.initial, (9,), c.final, c.kind)
    assert "not in the current graph" in check_witness(bad).failure


def test_certify_nonbinomial_examples():
    k, c = certify_nonbinomial(complete_graph(3))
    assert k == 2 and c.sequence == (0,)
    k, c = certify_nonbinomial(cycle_graph(4))
    assert k >= 2
    k, c = certify_nonbinomial(star_graph(3))
    assert k >= 2 and check_witness(c).ok
    with pytest.raises(PreconditionError):
        certify_nonbinomial(empty_graph(3))


def test_json_round_trip():
    for g in (complete_graph(3), path_graph(6), star_graph(4)):
        c = make_witness(g)
        obj = json.loads(c.to_json())
        assert set(obj) == {"kind", "initial", "sequence", "final"}
        assert set(obj["initial"]) == {"n", "edges", "marks"}
        assert WitnessCertificate.from_json(c.to_json()) == c


def test_json_final_graft_keeps_vertex_names():
    obj = nonpath_witness(complete_graph(3)).to_json_obj()
    assert obj["final"] == {"n": 2, "edges": [], "marks": [], "vertices": [1, 2]}


def test_completeness_every_graph_up_to_seven_vertices():
    # networkx's atlas lists every graph on at most 7 vertices up to isomorphism.
    checked = 0
    for h in nx.graph_atlas_g()[1:]:
        g = SimpleGraph(h.nodes, h.edges)
        c = make_witness(g)
        report = check_witness(c)
        assert report.ok, report.describe()
        k = corank(graft_adjacency(c.initial))
        if is_path(g):
            assert c.kind == PATH_WITNESS and k == 1
        else:
            assert c.kind == NONPATH_WITNESS and k >= 2
            assert len(c.final.isolated_unmarked()) >= 2
            checked += is_connected(g)
    # connected graphs on 2..7 vertices, minus one path per order
    assert checked == (1 + 2 + 6 + 21 + 112 + 853) - 6
