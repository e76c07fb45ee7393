"""Maximum bipartite matching, term rank, and allowed/forced edge classification."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence, Union

from ._digraph import strongly_connected_components
from .core import BipartiteGraph, Matching, ZeroOneMatrix, _bits, as_rows
from .errors import NoPerfectMatching, NotSquare

__all__ = [
    "TermRankResult",
    "EdgeClassification",
    "maximum_matching",
    "term_rank",
    "has_perfect_matching",
    "classify_edges",
    "has_total_support",
]

GraphLike = Union[BipartiteGraph, ZeroOneMatrix]

_INF = float("inf")


@dataclass(frozen=True)
class TermRankResult:
    rho: int
    witness: Matching


@dataclass(frozen=True)
class EdgeClassification:
    """``allowed``: edges in some perfect matching; ``forced``: in every one."""

    allowed: frozenset[tuple[int, int]]
    forced: frozenset[tuple[int, int]]
    witness_matching: Matching


def hopcroft_karp(rows: Sequence[int], ncols: int) -> list[int]:
    """Maximum matching of the bipartite graph with row bitmasks ``rows``.

    Returns ``mate`` with ``mate[i]`` the 0-based column matched to row ``i``
    (or -1).  Rows and neighbours are scanned in ascending order, so the
    result is a deterministic function of the input.
    """
    m = len(rows)
    adj = [_bits(r) for r in rows]
    mate_a = [-1] * m
    mate_b = [-1] * ncols
    dist: list[float] = [0] * m

    def bfs() -> float:
        queue = deque()
        for a in range(m):
            if mate_a[a] == -1:
                dist[a] = 0
                queue.append(a)
            else:
                dist[a] = _INF
        limit = _INF
        while queue:
            a = queue.popleft()
            if dist[a] >= limit:
                continue
            for b in adj[a]:
                a2 = mate_b[b]
                if a2 == -1:
                    limit = min(limit, dist[a])
                elif dist[a2] == _INF:
                    dist[a2] = dist[a] + 1
                    queue.append(a2)
        return limit

    while True:
        limit = bfs()
        if limit == _INF:
            break
        it = [0] * m
        for root in range(m):
            if mate_a[root] != -1:
                continue
            path = [root]
            while path:
                a = path[-1]
                step = None
                while it[a] < len(adj[a]):
                    b = adj[a][it[a]]
                    it[a] += 1
                    a2 = mate_b[b]
                    if a2 == -1:
                        if dist[a] == limit:
                            step = "augment"
                            break
                    elif dist[a2] == dist[a] + 1:
                        step = a2
                        break
                if step == "augment":
                    for v in path:
                        b = adj[v][it[v] - 1]
                        mate_a[v] = b
                        mate_b[b] = v
                    break
                if step is None:
                    dist[a] = _INF
                    path.pop()
                else:
                    path.append(step)
    return mate_a


def pair_digraph(rows: Sequence[int], mate: Sequence[int]) -> list[list[int]]:
    """Digraph on matched pairs (indexed by row) for a perfect matching ``mate``.

    There is an arc ``u -> v`` for each non-matching edge from row ``u`` to the
    column matched with row ``v``.  Cycles are exactly the alternating cycles.
    """
    owner = {b: a for a, b in enumerate(mate)}
    return [[owner[b] for b in _bits(r) if b != mate[a]] for a, r in enumerate(rows)]


def maximum_matching(g: GraphLike) -> TermRankResult:
    rows, ncols = as_rows(g)
    mate = hopcroft_karp(rows, ncols)
    pairs = frozenset((a + 1, b + 1) for a, b in enumerate(mate) if b != -1)
    return TermRankResult(len(pairs), Matching(pairs))


def term_rank(x: GraphLike) -> int:
    return maximum_matching(x).rho


def has_perfect_matching(g: GraphLike) -> bool:
    rows, ncols = as_rows(g)
    if len(rows) != ncols:
        return False
    return all(b != -1 for b in hopcroft_karp(rows, ncols))


def _perfect_mate(rows: Sequence[int], ncols: int) -> list[int]:
    if len(rows) != ncols:
        raise NoPerfectMatching(f"unbalanced: {len(rows)} rows vs {ncols} columns")
    mate = hopcroft_karp(rows, ncols)
    rho = sum(b != -1 for b in mate)
    if rho < ncols:
        raise NoPerfectMatching(f"term rank {rho} < {ncols}")
    return mate


def classify_edges(g: GraphLike) -> EdgeClassification:
    """Split the edges by membership in some/every perfect matching.

    A matching edge is forced iff its pair is alone in its strongly connected
    component of the pair digraph; any other edge is allowed iff both of its
    pairs share a component.
    """
    rows, ncols = as_rows(g)
    mate = _perfect_mate(rows, ncols)
    comp = strongly_connected_components(pair_digraph(rows, mate))
    size: dict[int, int] = {}
    for c in comp:
        size[c] = size.get(c, 0) + 1
    owner = {b: a for a, b in enumerate(mate)}
    allowed = set()
    forced = set()
    for a, r in enumerate(rows):
        for b in _bits(r):
            if b == mate[a]:
                allowed.add((a + 1, b + 1))
                if size[comp[a]] == 1:
                    forced.add((a + 1, b + 1))
            elif comp[a] == comp[owner[b]]:
                allowed.add((a + 1, b + 1))
    witness = Matching(frozenset((a + 1, b + 1) for a, b in enumerate(mate)))
    return EdgeClassification(frozenset(allowed), frozenset(forced), witness)


def has_total_support(x: GraphLike) -> bool:
    """Every 1 lies on a nonzero diagonal (the zero matrix does not qualify)."""
    rows, ncols = as_rows(x)
    if len(rows) != ncols:
        raise NotSquare(f"total support needs a square matrix, got {len(rows)}x{ncols}")
    try:
        cls = classify_edges(x)
    except NoPerfectMatching:
        return False
    return len(cls.allowed) == sum(bin(r).count("1") for r in rows)
