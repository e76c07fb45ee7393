import pytest

from bistable import BipartiteGraph, VertexSet, ZeroOneMatrix, from_graph, to_graph
from bistable.errors import NoPerfectMatching, NotSquare, TooLarge, Unbalanced
from bistable.generators import cycle, fixture, nk2
from bistable import oracle
from bistable.structure import (
    ZeroBlock,
    bistable_components,
    block_triangular_form,
    count_unit_blocks,
    cross_block_edges,
    is_alpha_minus_stable,
    is_alpha_plus_stable,
    is_alpha_stable,
    is_bistable,
    is_fully_indecomposable,
    is_partly_decomposable,
    is_two_dominating,
    maximum_stable_set,
    maximum_stable_sets,
    stability_number,
    stability_report,
    stable_set_zero_block,
)

X5 = fixture("fig5_x")
C6 = ZeroOneMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
K22 = to_graph(ZeroOneMatrix.ones(2))
K2 = to_graph(ZeroOneMatrix.ones(1))


def vs(a=(), b=()):
    return VertexSet(frozenset(a), frozenset(b))


def test_stability_number():
    assert stability_number(nk2(3)) == 3
    assert stability_number(K22) == 2
    g2 = fixture("fig1_g2")
    assert stability_number(g2) == 3 == oracle.stability_number_bruteforce(g2)


def test_konig_stable_set():
    g2 = fixture("fig1_g2")
    s = maximum_stable_set(g2)
    assert [s] == oracle.enumerate_maximum_stable_sets(g2)
    assert maximum_stable_set(X5) == vs(b=(1, 2, 3))


def test_maximum_stable_sets_match_enumeration():
    for name in ("fig1_g1", "fig1_g2", "fig2_g", "fig3_g1", "fig3_g2", "fig4_g"):
        g = fixture(name)
        assert maximum_stable_sets(g) == oracle.enumerate_maximum_stable_sets(g), name
    with pytest.raises(TooLarge):
        maximum_stable_sets(nk2(13))
    assert len(maximum_stable_sets(nk2(13), limit=26)) == 2 ** 13


def test_two_domination():
    assert is_two_dominating(K22, vs(a=(1, 2)))
    assert not is_two_dominating(nk2(3), VertexSet.side_a(nk2(3)))
    g1 = fixture("fig1_g1")
    assert not is_two_dominating(g1, VertexSet.side_b(g1))
    with pytest.raises(ValueError):
        is_two_dominating(K22, vs(a=(3,)))


def test_partly_decomposable_witnesses():
    assert is_partly_decomposable(ZeroOneMatrix.identity(2)) == ZeroBlock((1,), (2,))
    assert is_partly_decomposable(ZeroOneMatrix.ones(2)) is None
    assert is_partly_decomposable(X5) == ZeroBlock((3,), (1, 2))
    assert is_partly_decomposable(ZeroOneMatrix.zeros(1)) == ZeroBlock((1,), ())
    assert is_partly_decomposable(ZeroOneMatrix.ones(1)) is None
    with pytest.raises(NotSquare):
        is_partly_decomposable(ZeroOneMatrix.ones(2, 3))


def test_deficient_witness_is_a_zero_block():
    x = ZeroOneMatrix.from_rows([[1, 1, 1], [1, 0, 0], [1, 0, 0]])
    w = is_partly_decomposable(x)
    assert len(w.rows) + len(w.cols) == 3
    assert all(x.entry(i, j) == 0 for i in w.rows for j in w.cols)


def test_fully_indecomposable_examples():
    assert is_fully_indecomposable(C6)
    assert oracle.zero_submatrix_search(C6) is None
    assert not is_fully_indecomposable(ZeroOneMatrix.identity(3))
    assert not is_fully_indecomposable(fixture("fig5_z"))
    assert oracle.zero_submatrix_search(fixture("fig5_z")) == ((3,), (1, 2))
    assert is_fully_indecomposable(ZeroOneMatrix.ones(1))
    assert not is_fully_indecomposable(ZeroOneMatrix.zeros(1))


def test_bistable_examples():
    assert is_bistable(fixture("fig3_g2"))
    assert not is_bistable(fixture("fig3_g1"))
    assert is_bistable(K22)
    assert is_bistable(K2)
    assert not is_bistable(fixture("fig1_g2"))
    assert not is_bistable(BipartiteGraph(0, 0, frozenset()))


def test_k2_is_bistable_but_not_alpha_stable():
    assert is_bistable(K2) and oracle.bistable_bruteforce(K2)
    assert not is_alpha_stable(K2)
    assert not oracle.alpha_minus_bruteforce(K2)


def test_alpha_plus():
    assert is_alpha_plus_stable(fixture("fig1_g1"))
    assert is_alpha_plus_stable(fixture("fig4_g"))
    padded = BipartiteGraph(3, 3, frozenset({(1, 1), (2, 2)}))
    assert not is_alpha_plus_stable(padded)
    assert not oracle.alpha_plus_bruteforce(padded)
    with pytest.raises(Unbalanced):
        is_alpha_plus_stable(fixture("fig1_g2"))


def test_alpha_stable():
    assert is_alpha_stable(fixture("fig2_g"))
    assert not is_alpha_stable(X5)
    assert is_alpha_stable(C6)
    with pytest.raises(Unbalanced):
        is_alpha_stable(fixture("fig1_g2"))


def test_alpha_minus():
    assert is_alpha_minus_stable(fixture("fig1_g2"))
    assert not is_alpha_minus_stable(fixture("fig1_g1"))
    assert not is_alpha_minus_stable(nk2(3))


def test_stability_report_flags():
    rep = stability_report(fixture("fig1_g2"))
    assert (rep.alpha, rep.is_alpha_plus, rep.is_alpha_minus, rep.is_alpha) == (3, False, True, False)
    rep = stability_report(K22)
    assert rep.is_alpha and rep.is_bistable
    rep = stability_report(nk2(13))
    assert rep.is_alpha_minus is None and rep.is_alpha is False


def test_btf_examples():
    btf = block_triangular_form(ZeroOneMatrix.identity(3))
    assert btf.block_sizes == (1, 1, 1)
    assert block_triangular_form(C6).block_sizes == (3,)
    btf = block_triangular_form(X5)
    assert (btf.row_perm, btf.col_perm, btf.block_sizes) == ((1, 2, 3), (1, 2, 3), (2, 1))
    assert btf.blocks == (ZeroOneMatrix.ones(2), ZeroOneMatrix.ones(1))
    assert btf.apply(X5) == X5 == btf.recompose(X5)


def test_btf_zero_blocks_below_diagonal():
    x = fixture("fig4_g")
    m = from_graph(x)
    btf = block_triangular_form(x)
    y = btf.apply(m)
    for bi, rr in enumerate(btf.block_ranges()):
        for cr in btf.block_ranges()[:bi]:
            assert all(y.entry(r + 1, c + 1) == 0 for r in rr for c in cr)
    assert all(is_fully_indecomposable(b) for b in btf.blocks)


def test_btf_errors():
    with pytest.raises(NoPerfectMatching):
        block_triangular_form(ZeroOneMatrix.from_rows([[1, 1], [0, 0]]))
    with pytest.raises(NotSquare):
        block_triangular_form(ZeroOneMatrix.ones(2, 3))


def test_unit_blocks():
    assert count_unit_blocks(block_triangular_form(ZeroOneMatrix.identity(3))) == 3
    assert count_unit_blocks(block_triangular_form(X5)) == 1
    assert count_unit_blocks(block_triangular_form(C6)) == 0


def test_bistable_components_of_figures():
    assert [p.vertex_count for p in bistable_components(fixture("fig4_g"))] == [4, 6, 2]
    assert [p.vertex_count for p in bistable_components(fixture("fig2_g"))] == [4, 6]
    pieces = bistable_components(nk2(3))
    assert [p.vertex_count for p in pieces] == [2, 2, 2]
    with pytest.raises(Unbalanced):
        bistable_components(fixture("fig1_g2"))


def test_cross_block_edges():
    assert cross_block_edges(X5) == [(2, 3)]
    assert cross_block_edges(C6) == []


def test_stable_set_zero_block():
    assert stable_set_zero_block(K22, vs((1,), (1,))) is None
    layout = stable_set_zero_block(nk2(2), vs((1,), (2,)))
    assert (layout.p, layout.q) == (1, 1)
    layout = stable_set_zero_block(to_graph(X5), vs((3,), (1,)))
    assert (layout.row_perm, layout.col_perm) == ((3, 1, 2), (2, 3, 1))
    assert X5.permute(layout.row_perm, layout.col_perm).entry(1, 3) == 0
    with pytest.raises(ValueError):
        stable_set_zero_block(K22, vs((1,), ()))


def test_cycle_matrices():
    for n in range(2, 8):
        assert is_fully_indecomposable(cycle(n))
        assert cycle(n).count_zeros() == n * (n - 2)
