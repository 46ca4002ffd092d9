import pytest
from hypothesis import given

from oracles import corank_sum_poly
from petrial.bouquet import Bouquet, intersection_graph, path_bouquet
from petrial.errors import InvalidInputError, ResourceLimitError
from petrial.graph import SimpleGraph, complete_graph, cycle_graph, is_connected, path_graph, star_graph
from petrial.poly import (
    PetrialPolynomial,
    corank_counts,
    degree,
    is_binomial,
    is_interpolating,
    merge_counts,
    path_closed_form,
    poly_by_corank,
    poly_by_tracing,
    tracing_counts,
)
from strategies import bouquets, graphs


def P(*terms, n=None):
    return PetrialPolynomial(tuple(terms), n)


# K3 by exhaustive row-span ranks over its 8 marked adjacency matrices
K3_POLY = P((1, 1), (2, 4), (3, 3), n=3)


def test_k3_oracle_value_is_frozen_correctly():
    assert corank_sum_poly(3, [(0, 1), (1, 2), (0, 2)]) == K3_POLY.coeffs()


def test_poly_by_tracing_examples():
    assert poly_by_tracing(path_bouquet(1)) == P((0, 1), (1, 1), n=1)
    assert poly_by_tracing(path_bouquet(2)) == P((1, 1), (2, 3), n=2)
    assert poly_by_tracing(Bouquet((0, 0), {0})) == poly_by_tracing(Bouquet((0, 0)))
    assert poly_by_tracing(Bouquet(())) == P((0, 1), n=0)


def test_poly_by_corank_examples():
    assert poly_by_corank(path_graph(2)) == P((1, 1), (2, 3), n=2)
    assert poly_by_corank(path_graph(3)) == P((2, 3), (3, 5), n=3)
    assert poly_by_corank(complete_graph(3)) == K3_POLY
    assert poly_by_corank(SimpleGraph()) == P((0, 1), n=0)


def test_poly_by_corank_relabelled_vertices():
    g = SimpleGraph([3, 7, 9], [(3, 7), (7, 9), (3, 9)])
    assert poly_by_corank(g) == K3_POLY


def test_path_closed_form_examples():
    assert path_closed_form(1) == P((0, 1), (1, 1), n=1)
    assert path_closed_form(3) == P((2, 3), (3, 5), n=3)
    assert path_closed_form(4) == P((3, 5), (4, 11), n=4)
    assert path_closed_form(60).total() == 2 ** 60
    with pytest.raises(InvalidInputError):
        path_closed_form(0)


def test_closed_form_matches_evaluators():
    for n in range(1, 11):
        assert poly_by_corank(path_graph(n)) == path_closed_form(n)
    for n in range(1, 9):
        assert poly_by_tracing(path_bouquet(n)) == path_closed_form(n)


def test_predicates():
    assert is_binomial(P((1, 1), (2, 3)))
    assert not is_binomial(K3_POLY)
    assert not is_binomial(P((3, 5)))
    assert is_interpolating(P((0, 1), (1, 1)))
    assert is_interpolating(K3_POLY)
    assert not is_interpolating(P((0, 1), (2, 1)))
    assert degree(P((1, 1), (2, 3))) == 2
    assert degree(path_closed_form(7)) == 7
    assert degree(P((0, 1), (1, 1))) == 1
    with pytest.raises(InvalidInputError):
        degree(P())
    with pytest.raises(InvalidInputError):
        is_interpolating(P())


def test_polynomial_validation():
    with pytest.raises(InvalidInputError):
        P((1, 0))
    with pytest.raises(InvalidInputError):
        P((1, 1), (1, 2))
    with pytest.raises(InvalidInputError):
        P((1, 1), (2, 2), n=2)


def test_text_rendering():
    assert path_closed_form(3).to_text() == "3*z^2 + 5*z^3"
    assert path_closed_form(1).to_text() == "1 + z"
    assert K3_POLY.to_text() == "z + 4*z^2 + 3*z^3"
    assert P((0, 5), (1, 2)).to_text() == "5 + 2*z"
    assert P().to_text() == "0"


def test_json_rendering():
    p = path_closed_form(4)
    assert p.to_json_obj() == {"3": "5", "4": "11", "n": 4}
    assert PetrialPolynomial.from_json_obj(p.to_json_obj()) == p
    big = path_closed_form(80)
    assert PetrialPolynomial.from_json_obj(big.to_json_obj()) == big


def test_guard():
    with pytest.raises(ResourceLimitError):
        poly_by_corank(path_graph(21))
    with pytest.raises(ResourceLimitError):
        poly_by_tracing(path_bouquet(5), max_n=4)
    assert poly_by_corank(path_graph(5), max_n=5) == path_closed_form(5)


def test_sharded_counts_merge_to_full_result():
    g = star_graph(5)
    rows, n = g.dense_rows(), len(g)
    full = corank_counts(rows, n)
    cuts = [0, 1, 17, 40, 64]
    parts = [corank_counts(rows, n, lo, hi) for lo, hi in zip(cuts, cuts[1:])]
    assert merge_counts(parts) == full
    b = Bouquet((0, 1, 2, 0, 3, 1, 3, 2))
    full = tracing_counts(b)
    assert merge_counts([tracing_counts(b, 0, 5), tracing_counts(b, 5, 16)]) == full
    with pytest.raises(InvalidInputError):
        corank_counts(rows, n, 10, 100)


def test_parallel_matches_sequential():
    g = cycle_graph(9)
    assert poly_by_corank(g, jobs=3) == poly_by_corank(g)
    b = Bouquet((0, 1, 2, 0, 3, 1, 3, 2))
    assert poly_by_tracing(b, jobs=2) == poly_by_tracing(b)


@given(bouquets(max_n=6))
def test_oracle_equivalence(b):
    assert poly_by_tracing(b) == poly_by_corank(intersection_graph(b))


@given(graphs(max_n=5))
def test_corank_poly_matches_span_oracle(g):
    assert poly_by_corank(g).coeffs() == corank_sum_poly(len(g), g.edges())


@given(bouquets(max_n=6, twisted=False))
def test_connected_circle_graph_degree_and_interpolation(b):
    g = intersection_graph(b)
    p = poly_by_corank(g)
    assert p.total() == 2 ** b.n
    if is_connected(g):
        assert degree(p) == b.n
        assert is_interpolating(p)


def test_complete_graph_spread():
    for n in range(1, 7):
        p = poly_by_corank(complete_graph(n))
        assert all(p[d] for d in range(1, n + 1))
