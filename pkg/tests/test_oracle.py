import pytest

from bistable import BipartiteGraph, Matching, VertexSet, ZeroOneMatrix, to_graph
from bistable import oracle
from bistable.errors import TooLarge, Unbalanced
from bistable.generators import fixture, nk2

K22 = to_graph(ZeroOneMatrix.ones(2))


def test_enumerate_maximum_stable_sets():
    sets = oracle.enumerate_maximum_stable_sets(K22)
    assert sets == [VertexSet(frozenset({1, 2}), frozenset()), VertexSet(frozenset(), frozenset({1, 2}))]
    assert len(oracle.enumerate_maximum_stable_sets(fixture("fig3_g1"))) == 3
    assert len(oracle.enumerate_maximum_stable_sets(fixture("fig1_g2"))) == 1


def test_enumerate_perfect_matchings():
    assert len(oracle.enumerate_perfect_matchings(nk2(4))) == 1
    assert len(oracle.enumerate_perfect_matchings(to_graph(ZeroOneMatrix.ones(3)))) == 6
    assert oracle.enumerate_perfect_matchings(fixture("fig5_x")) == [
        Matching(frozenset({(1, 1), (2, 2), (3, 3)})),
        Matching(frozenset({(1, 2), (2, 1), (3, 3)})),
    ]
    with pytest.raises(Unbalanced):
        oracle.enumerate_perfect_matchings(fixture("fig1_g2"))
    with pytest.raises(TooLarge):
        oracle.enumerate_perfect_matchings(nk2(9))


def test_zero_submatrix_search():
    assert oracle.zero_submatrix_search(ZeroOneMatrix.ones(2)) is None
    assert oracle.zero_submatrix_search(ZeroOneMatrix.identity(2)) == ((1,), (2,))
    assert oracle.zero_submatrix_search(fixture("fig5_z")) == ((3,), (1, 2))
    assert oracle.zero_submatrix_search(ZeroOneMatrix.zeros(1)) == ((1,), ())


def test_hall_surplus():
    assert oracle.hall_surplus_check(K22)
    assert not oracle.hall_surplus_check(nk2(3))
    assert oracle.hall_surplus_check(fixture("fig3_g2"))


def test_alpha_bruteforce_fig1():
    g1, g2 = fixture("fig1_g1"), fixture("fig1_g2")
    assert oracle.alpha_plus_bruteforce(g1) and not oracle.alpha_minus_bruteforce(g1)
    assert not oracle.alpha_plus_bruteforce(g2) and oracle.alpha_minus_bruteforce(g2)
    assert oracle.alpha_plus_bruteforce(K22) and oracle.alpha_minus_bruteforce(K22)


def test_edge_addition_readings_differ_on_unbalanced_graphs():
    # fig1_g2: the unique maximum stable set {a1, a2, a3} loses a vertex when
    # two of its members are joined, but no cross edge can break it.
    g2 = fixture("fig1_g2")
    assert not oracle.alpha_plus_bruteforce(g2, all_pairs=True)
    assert oracle.alpha_plus_bruteforce(g2, all_pairs=False)


def test_guards_and_env_override(monkeypatch):
    big = nk2(11)
    with pytest.raises(TooLarge):
        oracle.alpha_minus_bruteforce(big)
    monkeypatch.setenv("BISTABLE_MAX_ORACLE", "22")
    assert not oracle.alpha_minus_bruteforce(big)
    monkeypatch.setenv("BISTABLE_MAX_ORACLE", "4")
    with pytest.raises(TooLarge):
        oracle.permanent_laplace(ZeroOneMatrix.identity(3))


def test_other_brute_force_helpers():
    x = fixture("fig5_x")
    assert oracle.max_matching_bruteforce(to_graph(x)) == 3
    assert oracle.permanent_laplace(x) == 2
    assert oracle.stability_number_bruteforce(fixture("fig1_g2")) == 3
    assert not oracle.diagonal_characterization(x)
    assert oracle.diagonal_characterization(ZeroOneMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]]))
    assert oracle.bistable_bruteforce(K22)
    assert oracle.edge_classes_bruteforce(BipartiteGraph(2, 2, frozenset({(1, 1)}))) is None
