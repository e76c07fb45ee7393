"""Exact permanents (Ryser with Gray-code subset order) and positivity tests."""
from __future__ import annotations

import math
from typing import Union

from .core import BipartiteGraph, ZeroOneMatrix, as_rows, from_graph
from .errors import NotSquare, PermanentOverflow, TooLarge, Unbalanced
from .matching import hopcroft_karp

__all__ = ["permanent", "all_minor_permanents_positive", "count_perfect_matchings", "MAX_ORDER"]

MAX_ORDER = 20
INT64_MAX = (1 << 63) - 1


def permanent(x: ZeroOneMatrix, limit: int = MAX_ORDER) -> int:
    """Number of nonzero diagonals of ``x``.

    Ryser's formula ``(-1)^n sum_S (-1)^|S| prod_i rowsum_i(S)`` with the
    subsets ``S`` of columns visited in Gray-code order, so each step adds or
    removes one column.  The result must fit in a signed 64-bit integer;
    larger values raise ``PermanentOverflow``.
    """
    if not x.is_square:
        raise NotSquare(f"permanent needs a square matrix, got {x.rows}x{x.cols}")
    n = x.rows
    if n > limit:
        raise TooLarge("permanent", n, limit)
    columns = [[i for i in range(n) if x.masks[i] >> j & 1] for j in range(n)]
    sums = [0] * n
    zero_rows = n
    total = 0
    prev = 0
    for k in range(1, 1 << n):
        gray = k ^ (k >> 1)
        j = (gray ^ prev).bit_length() - 1
        delta = 1 if gray >> j & 1 else -1
        for i in columns[j]:
            before = sums[i]
            sums[i] = before + delta
            if before == 0:
                zero_rows -= 1
            elif sums[i] == 0:
                zero_rows += 1
        prev = gray
        if zero_rows == 0:
            term = math.prod(sums)
            total += -term if bin(gray).count("1") & 1 else term
    value = -total if n & 1 else total
    if value > INT64_MAX:
        raise PermanentOverflow(f"permanent of order {n} exceeds 2^63 - 1")
    return value


def all_minor_permanents_positive(x: Union[ZeroOneMatrix, BipartiteGraph]) -> bool:
    """Every ``(n-1)``-minor has a nonzero diagonal (decided by matching)."""
    rows, n = as_rows(x)
    if len(rows) != n:
        raise NotSquare(f"expected a square matrix, got {len(rows)}x{n}")
    if n < 2:
        raise ValueError("minors need order at least 2")
    for i in range(n):
        kept = rows[:i] + rows[i + 1 :]
        for j in range(n):
            low = (1 << j) - 1
            minor = [(r & low) | ((r >> (j + 1)) << j) for r in kept]
            if any(b == -1 for b in hopcroft_karp(minor, n - 1)):
                return False
    return True


def count_perfect_matchings(g: BipartiteGraph, limit: int = MAX_ORDER) -> int:
    if not g.is_balanced:
        raise Unbalanced(f"|A| = {g.a_count} != |B| = {g.b_count}")
    if g.a_count == 0:
        return 1
    return permanent(from_graph(g), limit)
