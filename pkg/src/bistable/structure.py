"""Deciders for indecomposability and the stability properties, plus the
canonical block triangular form.

The decomposition fixes the deterministic maximum matching, contracts each
matched pair to a node, and orders the strongly connected components of the
resulting digraph topologically (ties broken by the smallest row index).
Zero blocks then sit strictly below the diagonal.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional, Union

from . import oracle
from ._digraph import ordered_components
from .core import (
    BipartiteGraph,
    Subgraph,
    VertexSet,
    ZeroOneMatrix,
    _bits,
    as_rows,
    induced_subgraph,
)
from .errors import NoPerfectMatching, NotSquare, TooLarge, Unbalanced
from .matching import _perfect_mate, classify_edges, hopcroft_karp, pair_digraph

__all__ = [
    "BlockTriangularForm",
    "StabilityReport",
    "ZeroBlock",
    "ZeroBlockLayout",
    "stability_number",
    "maximum_stable_set",
    "maximum_stable_sets",
    "is_two_dominating",
    "is_partly_decomposable",
    "is_fully_indecomposable",
    "is_bistable",
    "is_alpha_plus_stable",
    "is_alpha_minus_stable",
    "is_alpha_stable",
    "block_triangular_form",
    "count_unit_blocks",
    "bistable_components",
    "cross_block_edges",
    "stable_set_zero_block",
    "stability_report",
]

GraphLike = Union[BipartiteGraph, ZeroOneMatrix]

DEFAULT_ENUMERATION_LIMIT = 24


def _enumeration_limit(limit: int | None) -> int:
    if limit is not None:
        return limit
    env = os.environ.get("BISTABLE_MAX_ORACLE")
    return int(env) if env else DEFAULT_ENUMERATION_LIMIT


def _graph(g: GraphLike) -> BipartiteGraph:
    if isinstance(g, ZeroOneMatrix):
        return BipartiteGraph(g.rows, g.cols, frozenset(g.ones_positions()))
    return g


def _square(x: GraphLike) -> tuple[tuple[int, ...], int]:
    rows, ncols = as_rows(x)
    if len(rows) != ncols:
        raise NotSquare(f"expected a square matrix, got {len(rows)}x{ncols}")
    return rows, ncols


def _connected(rows, ncols) -> bool:
    """Connectivity of the bipartite graph on ``len(rows) + ncols`` vertices."""
    m = len(rows)
    if m + ncols <= 1:
        return True
    cols_of = [0] * ncols
    for i, r in enumerate(rows):
        for j in _bits(r):
            cols_of[j] |= 1 << i
    seen_rows, seen_cols = 0, 0
    if m:
        frontier_rows, frontier_cols = 1, 0
    else:
        frontier_rows, frontier_cols = 0, 1
    while frontier_rows or frontier_cols:
        seen_rows |= frontier_rows
        seen_cols |= frontier_cols
        new_cols = 0
        for i in _bits(frontier_rows):
            new_cols |= rows[i]
        new_rows = 0
        for j in _bits(frontier_cols):
            new_rows |= cols_of[j]
        frontier_rows = new_rows & ~seen_rows
        frontier_cols = new_cols & ~seen_cols
    return seen_rows == (1 << m) - 1 and seen_cols == (1 << ncols) - 1


def stability_number(g: GraphLike) -> int:
    """``alpha(G) = |A| + |B| - rho`` (König)."""
    rows, ncols = as_rows(g)
    mate = hopcroft_karp(rows, ncols)
    return len(rows) + ncols - sum(b != -1 for b in mate)


def _alternating_reach(rows, mate) -> tuple[set[int], set[int]]:
    """Rows and columns reachable from unmatched rows by alternating paths.

    Rows outside and columns inside form a minimum vertex cover (König).
    """
    owner = {b: a for a, b in enumerate(mate) if b != -1}
    z_rows = {a for a in range(len(rows)) if mate[a] == -1}
    z_cols: set[int] = set()
    stack = list(z_rows)
    while stack:
        a = stack.pop()
        for b in _bits(rows[a]):
            if b in z_cols:
                continue
            z_cols.add(b)
            a2 = owner.get(b)
            if a2 is not None and a2 not in z_rows:
                z_rows.add(a2)
                stack.append(a2)
    return z_rows, z_cols


def maximum_stable_set(g: GraphLike) -> VertexSet:
    """One maximum stable set: the complement of König's minimum vertex cover.

    ``Z`` collects the vertices reachable from unmatched A-vertices along
    alternating paths; the stable set is ``(A ∩ Z) ∪ (B - Z)``.
    """
    rows, ncols = as_rows(g)
    z_rows, z_cols = _alternating_reach(rows, hopcroft_karp(rows, ncols))
    return VertexSet(
        frozenset(a + 1 for a in z_rows),
        frozenset(b + 1 for b in range(ncols) if b not in z_cols),
    )


def _subset_unions(masks) -> list[int]:
    """``out[S]`` is the OR of ``masks[k]`` over the bits ``k`` of ``S``."""
    out = [0] * (1 << len(masks))
    for s in range(1, len(out)):
        low = s & -s
        out[s] = out[s ^ low] | masks[low.bit_length() - 1]
    return out


def maximum_stable_sets(g: GraphLike, limit: int | None = None) -> list[VertexSet]:
    """All maximum stable sets, in lexicographic order.

    Every maximum stable set is ``S_X ∪ (Y - N(S_X))`` for some subset ``S_X``
    of the smaller side ``X``, so only ``2^min(|A|,|B|)`` candidates are tried.
    """
    g = _graph(g)
    cap = _enumeration_limit(limit)
    if g.vertex_count > cap:
        raise TooLarge("maximum stable set enumeration", g.vertex_count, cap)
    alpha = stability_number(g)
    swap = g.a_count > g.b_count
    small, big = (g.b_masks, g.a_count) if swap else (g.a_masks, g.b_count)
    full = (1 << big) - 1
    found = []
    for s, nb in enumerate(_subset_unions(small)):
        rest = full & ~nb
        if bin(s).count("1") + bin(rest).count("1") != alpha:
            continue
        xs = frozenset(k + 1 for k in _bits(s))
        ys = frozenset(k + 1 for k in _bits(rest))
        found.append(VertexSet(ys, xs) if swap else VertexSet(xs, ys))
    found.sort(key=VertexSet.sort_key)
    return found


def is_two_dominating(g: BipartiteGraph, d: VertexSet) -> bool:
    """Every vertex outside ``d`` has at least two neighbours in ``d``."""
    if not d.is_valid_for(g):
        raise ValueError(f"{d} is not a vertex set of this graph")
    d_a = sum(1 << (i - 1) for i in d.a_members)
    d_b = sum(1 << (j - 1) for j in d.b_members)
    for i in range(1, g.a_count + 1):
        if i not in d.a_members and bin(g.a_masks[i - 1] & d_b).count("1") < 2:
            return False
    for j in range(1, g.b_count + 1):
        if j not in d.b_members and bin(g.b_masks[j - 1] & d_a).count("1") < 2:
            return False
    return True


@dataclass(frozen=True)
class ZeroBlock:
    """Rows ``rows`` and columns ``cols`` (1-based) span an all-zero submatrix."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]


def is_partly_decomposable(x: GraphLike) -> Optional[ZeroBlock]:
    """A ``k x (n-k)`` zero submatrix with ``1 <= k <= n-1``, or ``None``.

    For ``n = 1`` the witness of ``[0]`` is ``rows=(1,), cols=()``.
    Deficient term rank yields the zero block left by a minimum cover;
    otherwise the witness is the reachability closure of the first pair whose
    closure is not everything.
    """
    rows, n = _square(x)
    if n == 1:
        return ZeroBlock((1,), ()) if rows[0] == 0 else None
    mate = hopcroft_karp(rows, n)
    if any(b == -1 for b in mate):
        z_rows, z_cols = _alternating_reach(rows, mate)
        block_rows = sorted(z_rows)
        block_cols = [b for b in range(n) if b not in z_cols]
        k = min(len(block_rows), n - 1)
        return ZeroBlock(
            tuple(a + 1 for a in block_rows[:k]),
            tuple(b + 1 for b in block_cols[: n - k]),
        )
    succ = pair_digraph(rows, mate)
    for u in range(n):
        reach = {u}
        stack = [u]
        while stack:
            v = stack.pop()
            for w in succ[v]:
                if w not in reach:
                    reach.add(w)
                    stack.append(w)
        if len(reach) < n:
            return ZeroBlock(
                tuple(a + 1 for a in sorted(reach)),
                tuple(sorted(mate[v] + 1 for v in range(n) if v not in reach)),
            )
    return None


def is_fully_indecomposable(x: GraphLike) -> bool:
    """Full term rank, connected, and every edge lies on a nonzero diagonal."""
    rows, n = _square(x)
    try:
        cls = classify_edges(x)
    except NoPerfectMatching:
        return False
    if not _connected(rows, n):
        return False
    return len(cls.allowed) == sum(bin(r).count("1") for r in rows)


def is_bistable(g: GraphLike) -> bool:
    """``A`` and ``B`` are the only maximum stable sets.

    Decided as balanced + connected + fully indecomposable matrix.  ``K_2``
    counts as bistable.
    """
    rows, ncols = as_rows(g)
    if len(rows) != ncols or ncols == 0:
        return False
    return is_fully_indecomposable(g)


def _balanced(g: GraphLike) -> tuple[tuple[int, ...], int]:
    rows, ncols = as_rows(g)
    if len(rows) != ncols:
        raise Unbalanced(
            f"|A| = {len(rows)} != |B| = {ncols}; use oracle.alpha_plus_bruteforce"
        )
    return rows, ncols


def is_alpha_plus_stable(g: GraphLike) -> bool:
    rows, n = _balanced(g)
    return all(b != -1 for b in hopcroft_karp(rows, n))


def is_alpha_stable(g: GraphLike) -> bool:
    """Perfect matching with no forced edge.

    On a disconnected graph this is the same as every component being
    balanced and alpha-stable, since forced edges are local to components.
    """
    _balanced(g)
    try:
        return not classify_edges(g).forced
    except NoPerfectMatching:
        return False


def is_alpha_minus_stable(g: GraphLike, limit: int | None = None) -> bool:
    """Every maximum stable set is 2-dominating (exhaustive, size-guarded)."""
    g = _graph(g)
    return all(is_two_dominating(g, s) for s in maximum_stable_sets(g, limit))


@dataclass(frozen=True)
class BlockTriangularForm:
    """``X.permute(row_perm, col_perm)`` is block upper triangular.

    ``row_perm[r]`` is the original row placed at position ``r + 1``; the same
    for columns.  ``blocks`` are the fully indecomposable diagonal blocks.
    """

    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]
    block_sizes: tuple[int, ...]
    blocks: tuple[ZeroOneMatrix, ...]

    @property
    def k(self) -> int:
        return len(self.block_sizes)

    def apply(self, x: ZeroOneMatrix) -> ZeroOneMatrix:
        return x.permute(self.row_perm, self.col_perm)

    def block_ranges(self) -> list[range]:
        out, start = [], 0
        for size in self.block_sizes:
            out.append(range(start, start + size))
            start += size
        return out

    def block_rows(self, index: int) -> tuple[int, ...]:
        r = self.block_ranges()[index]
        return self.row_perm[r.start : r.stop]

    def block_cols(self, index: int) -> tuple[int, ...]:
        r = self.block_ranges()[index]
        return self.col_perm[r.start : r.stop]

    def recompose(self, x: ZeroOneMatrix) -> ZeroOneMatrix:
        """Assemble the permuted matrix from ``blocks`` and the off-diagonal
        parts of ``x``; zeros are written below the diagonal blocks."""
        n = len(self.row_perm)
        grid = [[0] * n for _ in range(n)]
        ranges = self.block_ranges()
        for bi, rr in enumerate(ranges):
            for bj, cr in enumerate(ranges):
                if bj < bi:
                    continue
                for r in rr:
                    for c in cr:
                        if bi == bj:
                            v = self.blocks[bi].entry(r - rr.start + 1, c - cr.start + 1)
                        else:
                            v = x.entry(self.row_perm[r], self.col_perm[c])
                        grid[r][c] = v
        return ZeroOneMatrix.from_rows(grid)


def block_triangular_form(x: GraphLike) -> BlockTriangularForm:
    rows, n = _square(x)
    mate = _perfect_mate(rows, n)
    order = ordered_components(pair_digraph(rows, mate))
    row_perm = tuple(a + 1 for comp in order for a in comp)
    col_perm = tuple(mate[a] + 1 for comp in order for a in comp)
    matrix = ZeroOneMatrix(n, n, rows)
    blocks = tuple(
        matrix.submatrix([a + 1 for a in comp], [mate[a] + 1 for a in comp]) for comp in order
    )
    return BlockTriangularForm(row_perm, col_perm, tuple(len(c) for c in order), blocks)


def count_unit_blocks(btf: BlockTriangularForm) -> int:
    return sum(1 for s in btf.block_sizes if s == 1)


def bistable_components(g: GraphLike) -> list[Subgraph]:
    """Vertex-disjoint bistable pieces, one per diagonal block.

    Pieces are listed by their smallest A-vertex, not in block order.
    """
    g = _graph(g)
    if not g.is_balanced:
        raise Unbalanced(f"|A| = {g.a_count} != |B| = {g.b_count}")
    btf = block_triangular_form(g)
    pieces = [induced_subgraph(g, btf.block_rows(i), btf.block_cols(i)) for i in range(btf.k)]
    return sorted(pieces, key=lambda piece: piece.a_labels[0])


def cross_block_edges(g: GraphLike, btf: BlockTriangularForm | None = None) -> list[tuple[int, int]]:
    """Edges of ``g`` joining two different diagonal blocks."""
    g = _graph(g)
    btf = btf or block_triangular_form(g)
    row_block, col_block = {}, {}
    for k in range(btf.k):
        for r in btf.block_rows(k):
            row_block[r] = k
        for c in btf.block_cols(k):
            col_block[c] = k
    return sorted((i, j) for i, j in g.edges if row_block[i] != col_block[j])


@dataclass(frozen=True)
class ZeroBlockLayout:
    """Permutations that put a ``p x q`` zero block in the upper-right corner."""

    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]
    p: int
    q: int


def stable_set_zero_block(g: BipartiteGraph, s: VertexSet) -> Optional[ZeroBlockLayout]:
    """If ``s`` is stable, order ``S ∩ A`` first among rows and ``S ∩ B`` last
    among columns; the top-right ``p x q`` block is then zero."""
    p, q = len(s.a_members), len(s.b_members)
    if p < 1 or q < 1:
        raise ValueError("the vertex set must meet both sides")
    if not s.is_valid_for(g):
        raise ValueError(f"{s} is not a vertex set of this graph")
    if any(i in s.a_members and j in s.b_members for i, j in g.edges):
        return None
    rows = sorted(s.a_members) + [i for i in range(1, g.a_count + 1) if i not in s.a_members]
    cols = [j for j in range(1, g.b_count + 1) if j not in s.b_members] + sorted(s.b_members)
    return ZeroBlockLayout(tuple(rows), tuple(cols), p, q)


@dataclass(frozen=True)
class StabilityReport:
    """``None`` marks a flag whose exhaustive decider exceeded its guard."""

    alpha: int
    is_alpha_plus: Optional[bool]
    is_alpha_minus: Optional[bool]
    is_alpha: Optional[bool]
    is_bistable: bool


def stability_report(g: GraphLike, limit: int | None = None) -> StabilityReport:
    g = _graph(g)
    try:
        minus: Optional[bool] = is_alpha_minus_stable(g, limit)
    except TooLarge:
        minus = None
    if g.is_balanced:
        plus: Optional[bool] = is_alpha_plus_stable(g)
        both: Optional[bool] = is_alpha_stable(g)
    else:
        try:
            plus = oracle.alpha_plus_bruteforce(g)
        except TooLarge:
            plus = None
        if plus is False or minus is False:
            both = False
        elif plus is None or minus is None:
            both = None
        else:
            both = True
    return StabilityReport(stability_number(g), plus, minus, both, is_bistable(g))
