"""Brute-force reference deciders.

Nothing here imports the fast modules; every answer comes from plain
enumeration so that agreement with the fast paths is evidence rather than
tautology.  Each routine has a size guard.  ``BISTABLE_MAX_ORACLE`` (a vertex
count) overrides every guard: vertex-count guards take it as is, guards on
matrix order take half of it.
"""
from __future__ import annotations

import itertools
import os
from typing import Iterator, Optional

from .core import BipartiteGraph, Matching, VertexSet, ZeroOneMatrix
from .errors import NotSquare, TooLarge, Unbalanced

__all__ = [
    "enumerate_maximum_stable_sets",
    "enumerate_perfect_matchings",
    "zero_submatrix_search",
    "hall_surplus_check",
    "alpha_plus_bruteforce",
    "alpha_minus_bruteforce",
    "stability_number_bruteforce",
    "max_matching_bruteforce",
    "bistable_bruteforce",
    "edge_classes_bruteforce",
    "permanent_laplace",
    "diagonal_characterization",
]


def _guard(what: str, size: int, default: int, limit: Optional[int], per_vertex: bool = True) -> None:
    if limit is None:
        env = os.environ.get("BISTABLE_MAX_ORACLE")
        if env:
            limit = int(env) if per_vertex else int(env) // 2
        else:
            limit = default
    if size > limit:
        raise TooLarge(what, size, limit)


def _graph(obj) -> BipartiteGraph:
    if isinstance(obj, ZeroOneMatrix):
        return BipartiteGraph(obj.rows, obj.cols, frozenset(obj.ones_positions()))
    return obj


def _adjacency(g: BipartiteGraph) -> list[int]:
    """Adjacency bitmasks over all vertices; ``a_i`` is ``i - 1``, ``b_j`` is ``m + j - 1``."""
    m = g.a_count
    adj = [0] * g.vertex_count
    for i, j in g.edges:
        u, v = i - 1, m + j - 1
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _max_stable(adj: list[int]) -> int:
    """Stability number of an arbitrary simple graph by include/exclude branching."""
    cache: dict[int, int] = {}

    def best(cand: int) -> int:
        if cand == 0:
            return 0
        hit = cache.get(cand)
        if hit is not None:
            return hit
        low = cand & -cand
        v = low.bit_length() - 1
        rest = cand ^ low
        if adj[v] & rest == 0:
            value = 1 + best(rest)
        else:
            value = max(best(rest), 1 + best(rest & ~adj[v]))
        cache[cand] = value
        return value

    return best((1 << len(adj)) - 1)


def stability_number_bruteforce(g: BipartiteGraph, limit: Optional[int] = None) -> int:
    g = _graph(g)
    _guard("stability number", g.vertex_count, 24, limit)
    return _max_stable(_adjacency(g))


def enumerate_maximum_stable_sets(g: BipartiteGraph, limit: Optional[int] = None) -> list[VertexSet]:
    g = _graph(g)
    _guard("maximum stable set enumeration", g.vertex_count, 24, limit)
    adj = _adjacency(g)
    m = g.a_count
    best = 0
    found: list[int] = []

    def rec(cand: int, chosen: int, size: int) -> None:
        nonlocal best, found
        if size + bin(cand).count("1") < best:
            return
        if cand == 0:
            if size > best:
                best, found = size, [chosen]
            elif size == best:
                found.append(chosen)
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rec(cand & ~low & ~adj[v], chosen | low, size + 1)
        rec(cand & ~low, chosen, size)

    rec((1 << g.vertex_count) - 1, 0, 0)
    out = []
    for s in found:
        members = [v for v in range(g.vertex_count) if s >> v & 1]
        out.append(
            VertexSet(
                frozenset(v + 1 for v in members if v < m),
                frozenset(v - m + 1 for v in members if v >= m),
            )
        )
    out.sort(key=VertexSet.sort_key)
    return out


def bistable_bruteforce(g: BipartiteGraph, limit: Optional[int] = None) -> bool:
    """Exactly two maximum stable sets, and they are ``A`` and ``B``."""
    g = _graph(g)
    sets = enumerate_maximum_stable_sets(g, limit)
    return len(sets) == 2 and set(sets) == {VertexSet.side_a(g), VertexSet.side_b(g)}


def _perfect_matchings(g: BipartiteGraph) -> Iterator[tuple[int, ...]]:
    n = g.a_count
    cols: list[int] = []
    used = [False] * (n + 1)

    def rec(i: int):
        if i > n:
            yield tuple(cols)
            return
        for j in range(1, n + 1):
            if not used[j] and (i, j) in g.edges:
                used[j] = True
                cols.append(j)
                yield from rec(i + 1)
                cols.pop()
                used[j] = False

    yield from rec(1)


def enumerate_perfect_matchings(g: BipartiteGraph, limit: Optional[int] = None) -> list[Matching]:
    """All perfect matchings, ordered by their matched-column sequence."""
    g = _graph(g)
    if not g.is_balanced:
        raise Unbalanced(f"|A| = {g.a_count} != |B| = {g.b_count}")
    _guard("perfect matching enumeration", g.a_count, 8, limit, per_vertex=False)
    return [
        Matching(frozenset((i + 1, j) for i, j in enumerate(cols)))
        for cols in _perfect_matchings(g)
    ]


def edge_classes_bruteforce(g: BipartiteGraph, limit: Optional[int] = None):
    """``(allowed, forced)``: union and intersection of all perfect matchings."""
    matchings = enumerate_perfect_matchings(g, limit)
    if not matchings:
        return None
    allowed = frozenset().union(*(mt.pairs for mt in matchings))
    forced = frozenset.intersection(*(mt.pairs for mt in matchings))
    return allowed, forced


def max_matching_bruteforce(g: BipartiteGraph, limit: Optional[int] = None) -> int:
    """Largest matching by trying, row by row, every unused neighbour or nothing."""
    g = _graph(g)
    _guard("maximum matching search", g.vertex_count, 16, limit)
    rows = [[j for j in range(1, g.b_count + 1) if (i, j) in g.edges] for i in range(1, g.a_count + 1)]

    def rec(i: int, used: frozenset) -> int:
        if i == len(rows):
            return 0
        best = rec(i + 1, used)
        for j in rows[i]:
            if j not in used:
                best = max(best, 1 + rec(i + 1, used | {j}))
        return best

    return rec(0, frozenset())


def zero_submatrix_search(x: ZeroOneMatrix, limit: Optional[int] = None):
    """First ``(R, C)`` with ``|R| = k``, ``|C| = n - k`` and ``X[R, C] = 0``.

    Row subsets are tried by size, then lexicographically.  ``[0]`` of order 1
    gives ``((1,), ())``.
    """
    if not x.is_square:
        raise NotSquare(f"expected a square matrix, got {x.rows}x{x.cols}")
    n = x.rows
    _guard("zero submatrix search", n, 12, limit, per_vertex=False)
    grid = x.to_rows()
    if n == 1:
        return ((1,), ()) if grid[0][0] == 0 else None
    for k in range(1, n):
        for rows in itertools.combinations(range(n), k):
            zero_cols = [j for j in range(n) if all(grid[i][j] == 0 for i in rows)]
            if len(zero_cols) >= n - k:
                return tuple(i + 1 for i in rows), tuple(j + 1 for j in zero_cols[: n - k])
    return None


def hall_surplus_check(g: BipartiteGraph, limit: Optional[int] = None) -> bool:
    """``|N(X)| > |X|`` for every nonempty proper subset ``X`` of ``A`` and of ``B``."""
    g = _graph(g)
    _guard("Hall surplus check", max(g.a_count, g.b_count), 12, limit, per_vertex=False)
    a_nbrs = {i: {j for (a, j) in g.edges if a == i} for i in range(1, g.a_count + 1)}
    b_nbrs = {j: {i for (i, b) in g.edges if b == j} for j in range(1, g.b_count + 1)}
    for nbrs in (a_nbrs, b_nbrs):
        side = sorted(nbrs)
        for k in range(1, len(side)):
            for subset in itertools.combinations(side, k):
                covered = set().union(*(nbrs[v] for v in subset))
                if len(covered) <= k:
                    return False
    return True


def alpha_minus_bruteforce(g: BipartiteGraph, limit: Optional[int] = None) -> bool:
    """``alpha(G - e) = alpha(G)`` for every edge ``e``."""
    g = _graph(g)
    _guard("alpha-minus brute force", g.vertex_count, 20, limit)
    adj = _adjacency(g)
    base = _max_stable(adj)
    m = g.a_count
    for i, j in sorted(g.edges):
        u, v = i - 1, m + j - 1
        trial = list(adj)
        trial[u] &= ~(1 << v)
        trial[v] &= ~(1 << u)
        if _max_stable(trial) != base:
            return False
    return True


def alpha_plus_bruteforce(
    g: BipartiteGraph, all_pairs: bool = True, limit: Optional[int] = None
) -> bool:
    """``alpha(G + e) = alpha(G)`` for every non-edge ``e``.

    With ``all_pairs`` (the default) any two non-adjacent vertices may be
    joined, including two vertices of the same side.  With ``all_pairs=False``
    only ``a_i b_j`` additions are tried, which keeps the graph bipartite.
    """
    g = _graph(g)
    _guard("alpha-plus brute force", g.vertex_count, 20, limit)
    adj = _adjacency(g)
    base = _max_stable(adj)
    m = g.a_count
    total = g.vertex_count
    for u in range(total):
        for v in range(u + 1, total):
            if adj[u] >> v & 1:
                continue
            if not all_pairs and (u < m) == (v < m):
                continue
            trial = list(adj)
            trial[u] |= 1 << v
            trial[v] |= 1 << u
            if _max_stable(trial) != base:
                return False
    return True


def permanent_laplace(x: ZeroOneMatrix, limit: Optional[int] = None) -> int:
    """Permanent by cofactor expansion along the first row."""
    if not x.is_square:
        raise NotSquare(f"expected a square matrix, got {x.rows}x{x.cols}")
    _guard("Laplace permanent", x.rows, 10, limit, per_vertex=False)
    grid = x.to_rows()

    def per(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
        if not rows:
            return 1
        first, rest = rows[0], rows[1:]
        total = 0
        for k, c in enumerate(cols):
            if grid[first][c]:
                total += per(rest, cols[:k] + cols[k + 1 :])
        return total

    return per(tuple(range(x.rows)), tuple(range(x.cols)))


def diagonal_characterization(x: ZeroOneMatrix, limit: Optional[int] = None) -> bool:
    """Every 1 lies on a nonzero diagonal and every 0 lies on a diagonal whose
    other entries are all 1 (checked over all ``n!`` diagonals)."""
    if not x.is_square:
        raise NotSquare(f"expected a square matrix, got {x.rows}x{x.cols}")
    n = x.rows
    _guard("diagonal enumeration", n, 8, limit, per_vertex=False)
    grid = x.to_rows()
    ones_ok: set[tuple[int, int]] = set()
    zeros_ok: set[tuple[int, int]] = set()
    for perm in itertools.permutations(range(n)):
        zeros = [(i, perm[i]) for i in range(n) if grid[i][perm[i]] == 0]
        if not zeros:
            ones_ok.update((i, perm[i]) for i in range(n))
        elif len(zeros) == 1:
            zeros_ok.add(zeros[0])
    for i in range(n):
        for j in range(n):
            if grid[i][j] and (i, j) not in ones_ok:
                return False
            if not grid[i][j] and (i, j) not in zeros_ok:
                return False
    return True
