"""Boolean product / graph join and Kronecker product of matrices and graphs."""
from __future__ import annotations

from .core import BipartiteGraph, ZeroOneMatrix, _bits
from .errors import DimensionMismatch

__all__ = ["boolean_product", "join", "kronecker_product", "graph_kronecker"]


def boolean_product(x: ZeroOneMatrix, y: ZeroOneMatrix) -> ZeroOneMatrix:
    """``z_ij = 1`` iff ``x_ik = y_kj = 1`` for some ``k``."""
    if x.cols != y.rows:
        raise DimensionMismatch(f"{x.rows}x{x.cols} times {y.rows}x{y.cols}")
    masks = []
    for row in x.masks:
        acc = 0
        for k in _bits(row):
            acc |= y.masks[k]
        masks.append(acc)
    return ZeroOneMatrix(x.rows, y.cols, tuple(masks))


def join(g: BipartiteGraph, h: BipartiteGraph) -> BipartiteGraph:
    """``G * H`` on ``(A, C)``: ``a c`` is an edge iff ``a b`` in ``G`` and ``b c``
    in ``H`` for some shared middle vertex ``b``.  ``h``'s first side is ``g``'s
    second side."""
    if g.b_count != h.a_count:
        raise DimensionMismatch(f"G has |B| = {g.b_count}, H has {h.a_count} left vertices")
    via: dict[int, list[int]] = {}
    for b, c in h.edges:
        via.setdefault(b, []).append(c)
    edges = {(a, c) for a, b in g.edges for c in via.get(b, ())}
    return BipartiteGraph(g.a_count, h.b_count, frozenset(edges))


def kronecker_product(x: ZeroOneMatrix, y: ZeroOneMatrix) -> ZeroOneMatrix:
    """Block matrix ``[x_kr * Y]``.

    Entry ``((k-1)*p_rows + p, (r-1)*q_cols + q)`` equals ``x_kr * y_pq``.
    """
    masks = []
    for xrow in x.masks:
        cols = _bits(xrow)
        for yrow in y.masks:
            acc = 0
            for r in cols:
                acc |= yrow << (r * y.cols)
            masks.append(acc)
    return ZeroOneMatrix(x.rows * y.rows, x.cols * y.cols, tuple(masks))


def graph_kronecker(g: BipartiteGraph, h: BipartiteGraph) -> BipartiteGraph:
    """``G ⊗ H`` on ``A×C`` and ``B×D``: ``(a,c)(b,d)`` is an edge iff ``ab`` and ``cd`` are.

    Pairs are flattened row-major over the left factor: ``(a_k, c_p)`` is
    vertex ``(k-1)*|C| + p``, matching :func:`kronecker_product`.
    """
    edges = frozenset(
        ((k - 1) * h.a_count + p, (r - 1) * h.b_count + q)
        for k, r in g.edges
        for p, q in h.edges
    )
    return BipartiteGraph(g.a_count * h.a_count, g.b_count * h.b_count, edges)
