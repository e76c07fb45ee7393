"""Executable properties, run by ``bistable verify``.

Two suites share one registry.  ``laws`` draws seeded random instances and
checks the structural theorems and the product closure laws against the fast
deciders.  ``oracle`` walks every balanced graph up to a small order and
checks each fast decider against its brute-force counterpart.

A law is a function of a :class:`Context` that returns how many cases it
checked and raises :class:`Counterexample` on the first failure.
"""
from __future__ import annotations

import itertools
import time
import zlib
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Optional

from . import oracle
from .core import (
    BipartiteGraph,
    VertexSet,
    ZeroOneMatrix,
    connected_components,
    format_edge_list,
    format_matrix,
    from_graph,
    is_connected,
    parse_edge_list,
    parse_matrix,
    remove_vertices,
    to_graph,
)
from .errors import NoPerfectMatching
from .generators import (
    SplitMix64,
    cycle,
    nk2,
    random_balanced,
    random_fully_indecomposable,
    random_with_pm,
)
from .matching import classify_edges, has_perfect_matching, has_total_support, maximum_matching, term_rank
from .permanent import all_minor_permanents_positive, count_perfect_matchings, permanent
from .products import boolean_product, graph_kronecker, join, kronecker_product
from .structure import (
    bistable_components,
    block_triangular_form,
    count_unit_blocks,
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
    stable_set_zero_block,
)

__all__ = [
    "Counterexample",
    "Context",
    "Law",
    "LawResult",
    "SuiteResult",
    "LAWS",
    "SUITES",
    "law",
    "run_suite",
    "closure_failures",
    "decomposition_failures",
    "random_alpha_stable",
]

SUITES = ("laws", "oracle")


class Counterexample(AssertionError):
    pass


def show(obj) -> str:
    """Compact one-line rendering of a matrix or graph for failure messages."""
    if isinstance(obj, BipartiteGraph):
        obj = from_graph(obj) if obj.a_count and obj.b_count else None
        if obj is None:
            return "<empty graph>"
    if isinstance(obj, ZeroOneMatrix):
        return "/".join("".join(map(str, row)) for row in obj.to_rows())
    return repr(obj)


def expect(condition: bool, what: str, *objs) -> None:
    if not condition:
        raise Counterexample(f"{what} [{'; '.join(show(o) for o in objs)}]")


@dataclass
class Context:
    rng: SplitMix64
    count: int
    max_n: int
    notes: list[str] = field(default_factory=list)

    def n(self, lo: int = 1, hi: Optional[int] = None) -> int:
        hi = self.max_n if hi is None else min(hi, self.max_n)
        return self.rng.randint(min(lo, hi), hi)

    def seed(self) -> int:
        return self.rng.next_u64()

    def prob(self) -> float:
        return 0.15 + 0.7 * self.rng.random()

    def matrix(self, lo: int = 1, hi: Optional[int] = None) -> ZeroOneMatrix:
        return from_graph(random_balanced(self.n(lo, hi), self.prob(), self.seed()))

    def with_pm(self, lo: int = 1, hi: Optional[int] = None) -> ZeroOneMatrix:
        return from_graph(random_with_pm(self.n(lo, hi), 0.5 * self.prob(), self.seed()))

    def fully_indecomposable(self, lo: int = 1, hi: Optional[int] = None) -> ZeroOneMatrix:
        return random_fully_indecomposable(self.n(lo, hi), 0.4 * self.prob(), self.seed())

    def rectangular(self, hi: Optional[int] = None) -> ZeroOneMatrix:
        rows, cols = self.n(1, hi), self.n(1, hi)
        p = self.prob()
        grid = [[int(self.rng.random() < p) for _ in range(cols)] for _ in range(rows)]
        return ZeroOneMatrix.from_rows(grid)

    def mixed(self, lo: int = 1, hi: Optional[int] = None) -> ZeroOneMatrix:
        """Alternates plain random matrices with ones that have a perfect matching."""
        return self.matrix(lo, hi) if self.rng.below(2) else self.with_pm(lo, hi)


@dataclass(frozen=True)
class Law:
    name: str
    suite: str
    check: Callable[[Context], int]
    min_n: int = 1


@dataclass
class LawResult:
    name: str
    suite: str
    cases: int
    seconds: float
    failure: Optional[str] = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure is None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  {self.suite}/{self.name}  {self.cases} cases  {self.seconds:.2f}s"
        if self.failure:
            text += f"\n      {self.failure}"
        for note in self.notes:
            text += f"\n      note: {note}"
        return text


@dataclass
class SuiteResult:
    results: list[LawResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def summary(self) -> str:
        failed = sum(not r.passed for r in self.results)
        lines = [r.line() for r in self.results]
        lines.append(f"{len(self.results)} laws, {failed} failed")
        return "\n".join(lines)


LAWS: dict[str, Law] = {}


def law(suite: str, name: str, min_n: int = 1):
    def register(fn: Callable[[Context], int]) -> Callable[[Context], int]:
        LAWS[name] = Law(name, suite, fn, min_n)
        return fn

    return register


def run_suite(
    suite: str = "all",
    seed: int = 0,
    count: int = 200,
    max_n: int = 6,
    names: Optional[list[str]] = None,
    on_result: Optional[Callable[[LawResult], None]] = None,
) -> SuiteResult:
    """Run every registered law of ``suite`` ("laws", "oracle" or "all").

    Each law gets its own generator seeded from ``seed`` and the law's name,
    so adding or removing a law never changes another law's instances.
    """
    if suite not in SUITES + ("all",):
        raise ValueError(f"unknown suite {suite!r}")
    results = []
    for lw in list(LAWS.values()):
        if suite != "all" and lw.suite != suite:
            continue
        if names is not None and lw.name not in names:
            continue
        ctx = Context(SplitMix64((seed << 32) ^ zlib.crc32(lw.name.encode())), count, max_n)
        start = time.perf_counter()
        if max_n < lw.min_n:
            result = LawResult(lw.name, lw.suite, 0, 0.0, notes=[f"skipped: needs max-n >= {lw.min_n}"])
        else:
            try:
                cases = lw.check(ctx)
                result = LawResult(lw.name, lw.suite, cases, time.perf_counter() - start, notes=ctx.notes)
            except Counterexample as exc:
                result = LawResult(lw.name, lw.suite, 0, time.perf_counter() - start, str(exc), ctx.notes)
            except Exception as exc:  # a crash inside a law is a failure, not an abort
                failure = f"{type(exc).__name__}: {exc}"
                result = LawResult(lw.name, lw.suite, 0, time.perf_counter() - start, failure, ctx.notes)
        results.append(result)
        if on_result:
            on_result(result)
    return SuiteResult(results)


# ---------------------------------------------------------------------------
# shared checks (also used directly by the acceptance tests)


def _fi(x: ZeroOneMatrix) -> bool:
    return is_fully_indecomposable(x)


def _alpha_plus(x: ZeroOneMatrix) -> bool:
    return has_perfect_matching(x)


def decomposition_failures(x: ZeroOneMatrix) -> list[str]:
    """Block triangular form facts for one square matrix with a perfect matching."""
    out = []
    btf = block_triangular_form(x)
    permuted = btf.apply(x)
    if btf.recompose(x) != permuted:
        out.append("recomposed blocks differ from P X Q (nonzero entry below the diagonal blocks?)")
    if sorted(btf.row_perm) != list(range(1, x.rows + 1)) or sorted(btf.col_perm) != list(range(1, x.rows + 1)):
        out.append("P or Q is not a permutation")
    if sum(btf.block_sizes) != x.rows:
        out.append("block sizes do not sum to n")
    for k, block in enumerate(btf.blocks):
        if not _fi(block):
            out.append(f"diagonal block {k + 1} is not fully indecomposable")
    if (btf.k == 1) != _fi(x):
        out.append("k = 1 disagrees with full indecomposability")
    cls = classify_edges(x)
    if count_unit_blocks(btf) != len(cls.forced):
        out.append(f"{count_unit_blocks(btf)} unit blocks but {len(cls.forced)} forced edges")
    if is_alpha_stable(x) != (min(btf.block_sizes) >= 2):
        out.append("alpha-stability disagrees with minimum block size >= 2")
    if not is_alpha_plus_stable(x):
        out.append("a decomposition exists but the graph is not alpha-plus-stable")
    pieces = bistable_components(x)
    covered_a = sorted(i for p in pieces for i in p.a_labels)
    covered_b = sorted(j for p in pieces for j in p.b_labels)
    if covered_a != list(range(1, x.rows + 1)) or covered_b != list(range(1, x.rows + 1)):
        out.append("bistable components do not partition the vertices")
    if not all(is_bistable(p.graph) for p in pieces):
        out.append("a bistable component is not bistable")
    return out


def closure_failures(x: ZeroOneMatrix, y: ZeroOneMatrix) -> list[str]:
    """Product closure laws for a pair of square matrices.

    Each law is checked only when its hypotheses hold, so the function can be
    fed arbitrary pairs; on fully indecomposable pairs every law applies.
    """
    out = []
    n, m = x.rows, y.rows
    fx, fy = _fi(x), _fi(y)
    px, py = _alpha_plus(x), _alpha_plus(y)
    kron = kronecker_product(x, y)
    if n == m:
        prod = boolean_product(x, y)
        if fx and fy and not _fi(prod):
            out.append("fully indecomposable x fully indecomposable is not (Boolean product)")
        if px and fy and not _fi(prod):
            out.append("perfect-matching x fully indecomposable is not fully indecomposable")
        if px and py and not _alpha_plus(prod):
            out.append("join of alpha-plus-stable graphs is not alpha-plus-stable")
        for first, second in ((x, y), (y, x)):
            if _alpha_plus(first) and is_bistable(second) and not is_bistable(boolean_product(first, second)):
                out.append("join of alpha-plus-stable and bistable graphs is not bistable")
    if fx and not _fi(boolean_product(x, x.transpose())):
        out.append("X X^t is not fully indecomposable")
    if fx and fy and not _fi(kron):
        out.append("Kronecker product of fully indecomposable matrices is not fully indecomposable")
    rho_k, rho_x, rho_y = term_rank(kron), term_rank(x), term_rank(y)
    if rho_k < rho_x * rho_y:
        out.append(f"term rank {rho_k} of the Kronecker product is below {rho_x} * {rho_y}")
    if rho_x == n and rho_y == m and rho_k != n * m:
        out.append("full term rank factors give a deficient Kronecker product")
    if px and py and not _alpha_plus(kron):
        out.append("Kronecker product of alpha-plus-stable graphs is not alpha-plus-stable")
    for first, second in ((x, y), (y, x)):
        if is_alpha_stable(first) and _alpha_plus(second):
            if not is_alpha_stable(kronecker_product(first, second)):
                out.append("alpha-stable (x) alpha-plus-stable is not alpha-stable")
    return out


def random_alpha_stable(n: int, rng: SplitMix64, extra_prob: float = 0.3) -> ZeroOneMatrix:
    """A block upper triangular matrix with fully indecomposable diagonal
    blocks of order at least 2, rows and columns then shuffled.  ``n >= 2``."""
    if n < 2:
        raise ValueError("alpha-stable matrices need n >= 2")
    sizes = []
    left = n
    while left:
        size = left if left < 4 else rng.randint(2, left - 2 if left - 2 >= 2 else left)
        sizes.append(size)
        left -= size
    grid = [[0] * n for _ in range(n)]
    start = 0
    for size in sizes:
        block = random_fully_indecomposable(size, extra_prob, rng.next_u64())
        for i in range(size):
            for j in range(n):
                if j >= start + size:
                    grid[start + i][j] = int(rng.random() < extra_prob)
                elif j >= start:
                    grid[start + i][j] = block.entry(i + 1, j - start + 1)
        start += size
    x = ZeroOneMatrix.from_rows(grid)
    return x.permute(rng.permutation(n), rng.permutation(n))


# ---------------------------------------------------------------------------
# laws suite: seeded random instances


@law("laws", "core.round_trips")
def _round_trips(ctx: Context) -> int:
    for _ in range(ctx.count):
        x = ctx.rectangular()
        g = to_graph(x)
        expect(from_graph(g) == x, "matrix -> graph -> matrix changed the matrix", x)
        expect(to_graph(from_graph(g)) == g, "graph -> matrix -> graph changed the graph", x)
        expect(parse_matrix(format_matrix(x)) == x, ".01m round trip changed the matrix", x)
        expect(parse_edge_list(format_edge_list(g)) == g, ".bge round trip changed the graph", x)
    return ctx.count


@law("laws", "core.components_partition")
def _components_partition(ctx: Context) -> int:
    for _ in range(ctx.count):
        x = ctx.rectangular()
        g = to_graph(x)
        comps = connected_components(g)
        a = sorted(i for c in comps for i in c.a_labels)
        b = sorted(j for c in comps for j in c.b_labels)
        expect(a == list(range(1, g.a_count + 1)) and b == list(range(1, g.b_count + 1)),
               "components do not partition the vertices", x)
        where_a = {i: k for k, c in enumerate(comps) for i in c.a_labels}
        where_b = {j: k for k, c in enumerate(comps) for j in c.b_labels}
        expect(all(where_a[i] == where_b[j] for i, j in g.edges), "an edge crosses components", x)
        expect(sum(len(c.original_edges()) for c in comps) == len(g.edges), "edges lost", x)
    return ctx.count


@law("laws", "matching.witness")
def _matching_witness(ctx: Context) -> int:
    for _ in range(ctx.count):
        x = ctx.rectangular()
        g = to_graph(x)
        res = maximum_matching(g)
        expect(len(res.witness) == res.rho and res.witness.is_valid_for(g), "bad witness matching", x)
        if g.vertex_count <= 16:
            expect(res.rho == oracle.max_matching_bruteforce(g), "term rank disagrees with search", x)
    return ctx.count


@law("laws", "matching.edge_classes")
def _edge_classes(ctx: Context) -> int:
    for _ in range(ctx.count):
        x = ctx.with_pm(1, 7)
        cls = classify_edges(x)
        edges = set(x.ones_positions())
        expect(cls.forced <= cls.allowed <= edges, "forced <= allowed <= E fails", x)
        expect(cls.forced <= cls.witness_matching.pairs, "a forced edge is missing from the witness", x)
        brute = oracle.edge_classes_bruteforce(to_graph(x))
        expect(brute == (cls.allowed, cls.forced), "edge classes disagree with enumeration", x)
    return ctx.count


@law("laws", "matching.total_support_lines")
def _total_support_lines(ctx: Context) -> int:
    for _ in range(ctx.count):
        x = ctx.mixed()
        if has_total_support(x):
            expect(all(x.masks) and all(x.transpose().masks), "total support with an empty line", x)
    return ctx.count


@law("laws", "permanent.positivity_chain")
def _positivity_chain(ctx: Context) -> int:
    for _ in range(ctx.count):
        x = ctx.mixed()
        a, b, c = permanent(x) > 0, term_rank(x) == x.rows, has_perfect_matching(x)
        expect(a == b == c, f"per>0={a}, rho=n={b}, perfect matching={c}", x)
    return ctx.count


@law("laws", "permanent.ryser_vs_laplace")
def _ryser(ctx: Context) -> int:
    for _ in range(ctx.count):
        x = ctx.mixed(1, 8)
        expect(permanent(x) == oracle.permanent_laplace(x), "Ryser disagrees with cofactor expansion", x)
    return ctx.count


@law("laws", "permanent.permutation_invariance")
def _per_invariance(ctx: Context) -> int:
    for _ in range(ctx.count):
        x = ctx.mixed()
        y = x.permute(ctx.rng.permutation(x.rows), ctx.rng.permutation(x.rows))
        expect(permanent(x) == permanent(y), "per(PXQ) != per(X)", x, y)
    return ctx.count


@law("laws", "permanent.counts_matchings")
def _per_counts(ctx: Context) -> int:
    for _ in range(ctx.count):
        x = ctx.mixed(1, 7)
        g = to_graph(x)
        expect(count_perfect_matchings(g) == len(oracle.enumerate_perfect_matchings(g)),
               "permanent disagrees with the number of perfect matchings", x)
    return ctx.count


@law("laws", "structure.minors_vs_indecomposable", min_n=2)
def _minors(ctx: Context) -> int:
    for k in range(ctx.count):
        x = ctx.fully_indecomposable(2) if k % 3 == 0 else ctx.mixed(2)
        expect(all_minor_permanents_positive(x) == _fi(x), "minor positivity disagrees with indecomposability", x)
    return ctx.count


@law("laws", "structure.zero_block_witness")
def _zero_block_witness(ctx: Context) -> int:
    for k in range(ctx.count):
        x = ctx.fully_indecomposable() if k % 3 == 0 else ctx.mixed()
        w = is_partly_decomposable(x)
        expect((w is None) == _fi(x), "witness presence disagrees with indecomposability", x)
        if w is not None:
            n = x.rows
            expect(len(w.rows) + len(w.cols) == n and (n == 1 or 1 <= len(w.rows) <= n - 1),
                   "witness has the wrong shape", x)
            expect(all(x.entry(i, j) == 0 for i in w.rows for j in w.cols), "witness block has a 1", x)
        if x.rows <= 10:
            expect((oracle.zero_submatrix_search(x) is None) == (w is None), "zero block search disagrees", x)
    return ctx.count


@law("laws", "structure.diagonal_characterization", min_n=2)
def _diagonals(ctx: Context) -> int:
    for k in range(ctx.count):
        x = ctx.fully_indecomposable(2, 6) if k % 3 == 0 else ctx.mixed(2, 6)
        expect(oracle.diagonal_characterization(x) == _fi(x), "diagonal characterization disagrees", x)
    return ctx.count


@law("laws", "structure.zero_count_bound", min_n=2)
def _zero_bound(ctx: Context) -> int:
    for k in range(ctx.count):
        x = ctx.fully_indecomposable(2) if k % 2 == 0 else ctx.mixed(2)
        if _fi(x):
            n = x.rows
            expect(x.count_zeros() <= n * (n - 2), f"{x.count_zeros()} zeros exceed n(n-2)", x)
    for n in range(2, max(ctx.max_n, 10) + 1):
        expect(cycle(n).count_zeros() == n * (n - 2), f"cycle({n}) has the wrong number of zeros")
    return ctx.count


@law("laws", "structure.decomposition")
def _decomposition(ctx: Context) -> int:
    for _ in range(ctx.count):
        x = ctx.with_pm()
        failures = decomposition_failures(x)
        expect(not failures, "; ".join(failures), x)
        y = ctx.matrix()
        try:
            block_triangular_form(y)
            exists = True
        except NoPerfectMatching:
            exists = False
        expect(exists == is_alpha_plus_stable(y), "decomposition exists disagrees with alpha-plus", y)
    return ctx.count


@law("laws", "structure.total_support")
def _total_support(ctx: Context) -> int:
    for _ in range(ctx.count):
        x = ctx.mixed()
        g = to_graph(x)
        if not has_total_support(x):
            continue
        expect(is_connected(g) == _fi(x), "total support: connected disagrees with indecomposable", x)
        expect(all(is_bistable(c.graph) for c in connected_components(g)),
               "total support but a component is not bistable", x)
    for _ in range(ctx.count):
        x = ctx.mixed()
        g = to_graph(x)
        all_bistable = all(is_bistable(c.graph) for c in connected_components(g))
        expect(all_bistable == has_total_support(x), "total support disagrees with bistable components", x)
    return 2 * ctx.count


@law("laws", "structure.stable_set_zero_block")
def _stable_zero_block(ctx: Context) -> int:
    for _ in range(ctx.count):
        x = ctx.mixed()
        g = to_graph(x)
        n = x.rows
        a = frozenset(i for i in range(1, n + 1) if ctx.rng.below(2)) or frozenset([1])
        b = frozenset(j for j in range(1, n + 1) if ctx.rng.below(2)) or frozenset([n])
        s = VertexSet(a, b)
        stable = not any(i in a and j in b for i, j in g.edges)
        layout = stable_set_zero_block(g, s)
        expect((layout is not None) == stable, "zero block returned iff the set is stable", x)
        if layout:
            y = x.permute(layout.row_perm, layout.col_perm)
            expect(all(y.entry(r, c) == 0 for r in range(1, layout.p + 1)
                       for c in range(n - layout.q + 1, n + 1)), "upper-right block is not zero", x)
    return ctx.count


@law("laws", "structure.stable_sets")
def _stable_sets(ctx: Context) -> int:
    for _ in range(ctx.count):
        x = ctx.rectangular()
        g = to_graph(x)
        s = maximum_stable_set(g)
        alpha = stability_number(g)
        expect(len(s) == alpha, "König stable set has the wrong size", x)
        expect(not any(i in s.a_members and j in s.b_members for i, j in g.edges), "König set not stable", x)
        expect(alpha == oracle.stability_number_bruteforce(g), "stability number disagrees with search", x)
        expect(maximum_stable_sets(g) == oracle.enumerate_maximum_stable_sets(g),
               "maximum stable sets disagree with enumeration", x)
    return ctx.count


@law("laws", "structure.alpha_flags")
def _alpha_flags(ctx: Context) -> int:
    for _ in range(ctx.count):
        x = ctx.mixed()
        plus, minus, both = is_alpha_plus_stable(x), is_alpha_minus_stable(x), is_alpha_stable(x)
        expect(both == (plus and minus), f"alpha={both} but plus={plus}, minus={minus}", x)
        if is_bistable(x) and x.rows >= 2:
            expect(not classify_edges(x).forced, "bistable graph with a forced edge", x)
    return ctx.count


@law("laws", "structure.avoidable_ones")
def _avoidable_ones(ctx: Context) -> int:
    for _ in range(ctx.count):
        x = ctx.with_pm()
        g = to_graph(x)
        avoidable = all(
            has_perfect_matching(BipartiteGraph(g.a_count, g.b_count, g.edges - {e})) for e in g.edges
        )
        expect(avoidable == is_alpha_stable(x), "every 1 avoidable disagrees with alpha-stability", x)
    return ctx.count


@law("laws", "products.join_commutes")
def _join_commutes(ctx: Context) -> int:
    for _ in range(ctx.count):
        a, b, c = ctx.n(), ctx.n(), ctx.n()
        x = _rect(ctx, a, b)
        y = _rect(ctx, b, c)
        expect(from_graph(join(to_graph(x), to_graph(y))) == boolean_product(x, y),
               "join does not match the Boolean product", x, y)
        z = boolean_product(x, y)
        integer = [[sum(x.entry(i, k) * y.entry(k, j) for k in range(1, b + 1)) for j in range(1, c + 1)]
                   for i in range(1, a + 1)]
        expect(all((integer[i - 1][j - 1] > 0) == bool(z.entry(i, j))
                   for i in range(1, a + 1) for j in range(1, c + 1)),
               "Boolean product differs from the integer product's zero pattern", x, y)
    return ctx.count


def _rect(ctx: Context, rows: int, cols: int) -> ZeroOneMatrix:
    p = ctx.prob()
    return ZeroOneMatrix.from_rows([[int(ctx.rng.random() < p) for _ in range(cols)] for _ in range(rows)])


@law("laws", "products.kronecker_commutes")
def _kron_commutes(ctx: Context) -> int:
    for _ in range(ctx.count):
        x = _rect(ctx, ctx.n(1, 4), ctx.n(1, 4))
        y = _rect(ctx, ctx.n(1, 4), ctx.n(1, 4))
        expect(from_graph(graph_kronecker(to_graph(x), to_graph(y))) == kronecker_product(x, y),
               "graph Kronecker does not match the matrix Kronecker", x, y)
    return ctx.count


@law("laws", "products.identity_factor")
def _identity_factor(ctx: Context) -> int:
    for _ in range(ctx.count):
        x = ctx.matrix()
        n = x.rows
        expect(boolean_product(x, ZeroOneMatrix.identity(n)) == x, "X * I != X", x)
        expect(join(to_graph(x), nk2(n)) == to_graph(x), "G * nK2 != G", x)
    return ctx.count


@law("laws", "products.closure_on_indecomposable_pairs")
def _closure_fi(ctx: Context) -> int:
    for _ in range(ctx.count):
        n = ctx.n()
        x = ctx.fully_indecomposable(n, n)
        y = ctx.fully_indecomposable(n, n) if ctx.rng.below(2) else ctx.fully_indecomposable(1, 4)
        failures = closure_failures(x, y)
        expect(not failures, "; ".join(failures), x, y)
    return ctx.count


@law("laws", "products.closure_on_mixed_pairs")
def _closure_mixed(ctx: Context) -> int:
    for _ in range(ctx.count):
        n = ctx.n()
        x = ctx.mixed(n, n)
        y = ctx.mixed(n, n) if ctx.rng.below(2) else ctx.mixed(1, 4)
        failures = closure_failures(x, y)
        expect(not failures, "; ".join(failures), x, y)
    return ctx.count


@law("laws", "products.alpha_stable_kronecker", min_n=2)
def _alpha_stable_kron(ctx: Context) -> int:
    for _ in range(ctx.count):
        x = random_alpha_stable(ctx.n(2), ctx.rng)
        expect(is_alpha_stable(x), "generated matrix is not alpha-stable", x)
        y = ctx.with_pm(1, 4)
        k = kronecker_product(x, y)
        expect(is_alpha_stable(k), "alpha-stable (x) alpha-plus-stable is not alpha-stable", x, y)
        if k.rows <= 6:
            g = to_graph(k)
            expect(oracle.alpha_plus_bruteforce(g) and oracle.alpha_minus_bruteforce(g),
                   "brute force says the Kronecker product is not alpha-stable", x, y)
    return ctx.count


# ---------------------------------------------------------------------------
# oracle suite: every balanced graph up to a small order


@lru_cache(maxsize=None)
def _all_square(n: int) -> tuple[ZeroOneMatrix, ...]:
    width = (1 << n) - 1
    return tuple(
        ZeroOneMatrix(n, n, tuple((code >> (n * i)) & width for i in range(n)))
        for code in range(1 << (n * n))
    )


def exhaustive(max_n: int, lo: int = 1, cap: int = 4) -> Iterator[ZeroOneMatrix]:
    for n in range(lo, min(max_n, cap) + 1):
        yield from _all_square(n)


def _oracle_law(name: str, min_n: int = 1):
    def register(fn: Callable[[ZeroOneMatrix], None]):
        def run(ctx: Context) -> int:
            cases = 0
            for x in exhaustive(ctx.max_n, min_n):
                fn(x)
                cases += 1
            return cases

        LAWS[name] = Law(name, "oracle", run, min_n)
        return fn

    return register


@_oracle_law("oracle.matching_size")
def _o_matching(x: ZeroOneMatrix) -> None:
    expect(term_rank(x) == oracle.max_matching_bruteforce(to_graph(x)), "term rank disagrees", x)


@_oracle_law("oracle.edge_classes")
def _o_classes(x: ZeroOneMatrix) -> None:
    brute = oracle.edge_classes_bruteforce(to_graph(x))
    try:
        cls = classify_edges(x)
    except NoPerfectMatching:
        expect(brute is None, "classify_edges found no perfect matching but enumeration did", x)
        return
    expect(brute == (cls.allowed, cls.forced), "edge classes disagree with enumeration", x)


@_oracle_law("oracle.indecomposability")
def _o_fi(x: ZeroOneMatrix) -> None:
    expect((oracle.zero_submatrix_search(x) is None) == _fi(x), "zero block search disagrees", x)


@_oracle_law("oracle.bistable_iff_connected_indecomposable")
def _o_bistable(x: ZeroOneMatrix) -> None:
    g = to_graph(x)
    brute = oracle.bistable_bruteforce(g)
    expect(brute == (is_connected(g) and _fi(x)), "bistable disagrees with connected + indecomposable", x)
    expect(brute == is_bistable(g), "is_bistable disagrees with enumeration", x)


def bistable_conditions(x: ZeroOneMatrix) -> tuple[bool, bool, bool, bool, bool]:
    """The five equivalent bistability conditions for a connected balanced graph:
    (i) only A and B are maximum stable (enumeration); (ii) G and every
    G - a - b are alpha-plus-stable (fast); (iii) every G - a - b has a perfect
    matching (search); (iv) connected with every edge allowed (fast);
    (v) strict Hall surplus on every proper subset of either side (search)."""
    g = to_graph(x)
    n = x.rows
    pairs = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    minors = [remove_vertices(g, [a], [b]).graph for a, b in pairs]
    i = oracle.bistable_bruteforce(g)
    ii = is_alpha_plus_stable(g) and all(is_alpha_plus_stable(h) for h in minors)
    iii = all(oracle.max_matching_bruteforce(h) == n - 1 for h in minors)
    try:
        iv = is_connected(g) and classify_edges(g).allowed == g.edges
    except NoPerfectMatching:
        iv = False
    v = oracle.hall_surplus_check(g)
    return i, ii, iii, iv, v


@_oracle_law("oracle.five_bistability_conditions", min_n=2)
def _o_five_conditions(x: ZeroOneMatrix) -> None:
    if not is_connected(to_graph(x)):
        return
    flags = bistable_conditions(x)
    expect(len(set(flags)) == 1, f"conditions (i)-(v) = {flags}", x)


@_oracle_law("oracle.diagonal_characterization", min_n=2)
def _o_diagonals(x: ZeroOneMatrix) -> None:
    expect(oracle.diagonal_characterization(x) == _fi(x), "diagonal characterization disagrees", x)


@_oracle_law("oracle.minor_positivity", min_n=2)
def _o_minors(x: ZeroOneMatrix) -> None:
    expect(all_minor_permanents_positive(x) == _fi(x), "minor positivity disagrees", x)
    if _fi(x):
        n = x.rows
        expect(x.count_zeros() <= n * (n - 2), "too many zeros for a fully indecomposable matrix", x)


def _stable_set_checks(g: BipartiteGraph) -> None:
    sets = oracle.enumerate_maximum_stable_sets(g)
    minus = oracle.alpha_minus_bruteforce(g)
    plus = oracle.alpha_plus_bruteforce(g)
    expect(minus == all(is_two_dominating(g, s) for s in sets), "alpha-minus vs 2-domination", g)
    common = set.intersection(*({("a", i) for i in s.a_members} | {("b", j) for j in s.b_members} for s in sets))
    expect(plus == (len(common) < 2), "alpha-plus vs shared pair", g)
    expect(stability_number(g) == len(sets[0]), "stability number disagrees", g)
    expect(maximum_stable_sets(g) == sets, "maximum stable sets disagree with enumeration", g)
    expect(is_alpha_minus_stable(g) == minus, "is_alpha_minus_stable disagrees", g)


@_oracle_law("oracle.stability_flags")
def _o_flags(x: ZeroOneMatrix) -> None:
    g = to_graph(x)
    _stable_set_checks(g)
    plus = oracle.alpha_plus_bruteforce(g)
    expect(plus == oracle.alpha_plus_bruteforce(g, all_pairs=False), "edge-addition readings disagree", x)
    expect(plus == is_alpha_plus_stable(g), "alpha-plus disagrees with perfect matching", x)
    expect(is_alpha_stable(g) == (plus and oracle.alpha_minus_bruteforce(g)), "alpha-stable disagrees", x)


@law("oracle", "oracle.unbalanced_stability")
def _o_unbalanced(ctx: Context) -> int:
    """Unbalanced graphs with up to 3 vertices per side.  Also records how
    often the two readings of edge addition (any pair vs. cross pairs only)
    disagree; that count is informational."""
    cases = differ = 0
    side = min(ctx.max_n, 3)
    for a, b in itertools.product(range(1, side + 1), repeat=2):
        if a == b:
            continue
        cells = [(i, j) for i in range(1, a + 1) for j in range(1, b + 1)]
        for code in range(1 << len(cells)):
            g = BipartiteGraph(a, b, frozenset(c for k, c in enumerate(cells) if code >> k & 1))
            _stable_set_checks(g)
            if oracle.alpha_plus_bruteforce(g) != oracle.alpha_plus_bruteforce(g, all_pairs=False):
                differ += 1
            cases += 1
    ctx.notes.append(f"{differ} of {cases} unbalanced graphs are alpha-plus under one edge-addition "
                     "reading but not the other (0 of the balanced graphs)")
    return cases


@_oracle_law("oracle.unit_blocks")
def _o_units(x: ZeroOneMatrix) -> None:
    brute = oracle.edge_classes_bruteforce(to_graph(x))
    if brute is None:
        return
    btf = block_triangular_form(x)
    expect(count_unit_blocks(btf) == len(brute[1]), "unit blocks disagree with enumerated forced edges", x)
    avoidable = not brute[1]
    expect(avoidable == is_alpha_stable(x) == (min(btf.block_sizes) >= 2), "alpha-stable criteria disagree", x)
    if is_bistable(x) and x.rows >= 2:
        expect(not brute[1], "bistable graph with a forced edge", x)


@_oracle_law("oracle.permanent")
def _o_per(x: ZeroOneMatrix) -> None:
    count = len(oracle.enumerate_perfect_matchings(to_graph(x)))
    expect(permanent(x) == oracle.permanent_laplace(x) == count, "permanent disagrees", x)


@_oracle_law("oracle.stable_set_meets_both_sides", min_n=2)
def _o_prop4(x: ZeroOneMatrix) -> None:
    g = to_graph(x)
    if not is_connected(g):
        return
    n = x.rows
    # a stable set of n vertices meeting both sides
    found = any(
        not any((i, j) in g.edges for i in a for j in b)
        for k in range(1, n)
        for a in itertools.combinations(range(1, n + 1), k)
        for b in itertools.combinations(range(1, n + 1), n - k)
    )
    expect(found == (is_partly_decomposable(x) is not None), "split stable set disagrees", x)
