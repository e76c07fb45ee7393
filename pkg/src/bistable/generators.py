"""Published fixtures and seeded random instances.

Random instances come from SplitMix64 (Steele, Lea & Flood 2014), chosen
because it is a few lines in any language: the state advances by
``0x9E3779B97F4A7C15`` and each output is the state passed through the
``(30, 0xBF58476D1CE4E5B9, 27, 0x94D049BB133111EB, 31)`` mixer, all modulo
``2**64``.  Floats take the top 53 bits; bounded integers use rejection
sampling; shuffles are Fisher-Yates from the last position down.
"""
from __future__ import annotations

import json
import re
from functools import lru_cache
from importlib import resources
from typing import Union

from .core import BipartiteGraph, ZeroOneMatrix
from .errors import UnknownFixture

__all__ = [
    "SplitMix64",
    "fixture",
    "FIXTURE_NAMES",
    "cycle",
    "nk2",
    "random_balanced",
    "random_with_pm",
    "random_fully_indecomposable",
]

_MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int = 0):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in ``[0, 1)``."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n <= 0:
            raise ValueError("n must be positive")
        cutoff = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_u64()
            if r < cutoff:
                return r % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def permutation(self, n: int) -> list[int]:
        """A uniformly random ordering of ``1..n``."""
        items = list(range(1, n + 1))
        self.shuffle(items)
        return items


def _check(n: int, prob: float) -> None:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if not 0.0 <= prob <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {prob}")


def random_balanced(n: int, edge_prob: float, seed: int) -> BipartiteGraph:
    """Each of the ``n*n`` pairs (row-major) is an edge with probability ``edge_prob``."""
    _check(n, edge_prob)
    rng = SplitMix64(seed)
    edges = frozenset(
        (i, j) for i in range(1, n + 1) for j in range(1, n + 1) if rng.random() < edge_prob
    )
    return BipartiteGraph(n, n, edges)


def random_with_pm(n: int, extra_edge_prob: float, seed: int) -> BipartiteGraph:
    """A random permutation matching plus independent extra edges."""
    _check(n, extra_edge_prob)
    rng = SplitMix64(seed)
    sigma = rng.permutation(n)
    edges = {(i, sigma[i - 1]) for i in range(1, n + 1)}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if rng.random() < extra_edge_prob:
                edges.add((i, j))
    return BipartiteGraph(n, n, frozenset(edges))


def random_fully_indecomposable(n: int, extra_edge_prob: float, seed: int) -> ZeroOneMatrix:
    """A randomly placed cycle matrix (rows and columns shuffled) plus extra 1's.

    The cycle matrix is the reduced adjacency matrix of ``C_2n`` and is fully
    indecomposable for ``n >= 2``; adding 1's keeps it so.
    """
    from .structure import is_fully_indecomposable

    _check(n, extra_edge_prob)
    rng = SplitMix64(seed)
    rows = rng.permutation(n)
    cols = rng.permutation(n)
    grid = [[0] * n for _ in range(n)]
    for k in range(n):
        grid[rows[k] - 1][cols[k] - 1] = 1
        grid[rows[k] - 1][cols[(k + 1) % n] - 1] = 1
    for i in range(n):
        for j in range(n):
            if rng.random() < extra_edge_prob:
                grid[i][j] = 1
    x = ZeroOneMatrix.from_rows(grid)
    assert is_fully_indecomposable(x), "superset of a cycle matrix must be fully indecomposable"
    return x


def cycle(n: int) -> ZeroOneMatrix:
    """Reduced adjacency matrix of ``C_2n``: ``I + P`` with ``P`` the cyclic shift.

    It has exactly ``n(n-2)`` zeros for ``n >= 2``.
    """
    if n < 2:
        raise ValueError("cycle(n) needs n >= 2")
    return ZeroOneMatrix(n, n, tuple((1 << i) | (1 << ((i + 1) % n)) for i in range(n)))


def nk2(n: int) -> BipartiteGraph:
    """``n`` disjoint copies of ``K_2``."""
    return BipartiteGraph(n, n, frozenset((i, i) for i in range(1, n + 1)))


@lru_cache(maxsize=None)
def _figures() -> dict:
    text = resources.files("bistable").joinpath("data/figures.json").read_text()
    return {k: v for k, v in json.loads(text).items() if not k.startswith("_")}


_SIZED = {
    "cycle": cycle,
    "nk2": nk2,
    "ones": ZeroOneMatrix.ones,
    "identity": ZeroOneMatrix.identity,
}
_SIZED_NAME = re.compile(r"^(\w+)\((\d+)\)$")

FIXTURE_NAMES = (
    "fig1_g1", "fig1_g2", "fig2_g", "fig3_g1", "fig3_g2", "fig4_g",
    "fig5_x", "fig5_y", "fig5_z", "fig5_g", "fig5_h", "fig5_gh",
    "cycle(n)", "nk2(n)", "ones(n)", "identity(n)",
)


def fixture(name: str, n: int | None = None) -> Union[BipartiteGraph, ZeroOneMatrix]:
    """A published object by name: ``fixture("fig5_x")``, ``fixture("cycle(4)")``
    or ``fixture("cycle", 4)``."""
    match = _SIZED_NAME.match(name)
    if match:
        name, n = match.group(1), int(match.group(2))
    if name in _SIZED:
        if n is None:
            raise UnknownFixture(f"{name} needs a size, e.g. {name}(3)")
        return _SIZED[name](n)
    entry = _figures().get(name)
    if entry is None:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
    if entry["kind"] == "matrix":
        return ZeroOneMatrix.from_rows(entry["rows"])
    return BipartiteGraph(entry["a_count"], entry["b_count"], frozenset(map(tuple, entry["edges"])))
