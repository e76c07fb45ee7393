"""(0,1)-matrices, bipartite graphs, and the two text formats.

Every index that crosses the public API is 1-based: row ``i`` of a matrix is
vertex ``a_i`` of its graph and column ``j`` is ``b_j``.  Internally a matrix
row is an ``int`` bitmask whose bit ``j - 1`` holds ``x_ij``.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence, Union

from .errors import ParseError

__all__ = [
    "ZeroOneMatrix",
    "BipartiteGraph",
    "VertexSet",
    "Matching",
    "Subgraph",
    "from_graph",
    "to_graph",
    "induced_subgraph",
    "remove_vertices",
    "connected_components",
    "is_connected",
    "neighborhood",
    "parse_matrix",
    "format_matrix",
    "parse_edge_list",
    "format_edge_list",
    "load",
    "as_rows",
]


def _bits(mask: int) -> list[int]:
    """0-based positions of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class ZeroOneMatrix:
    rows: int
    cols: int
    masks: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"matrix must be at least 1x1, got {self.rows}x{self.cols}")
        masks = tuple(self.masks)
        if len(masks) != self.rows:
            raise ValueError(f"expected {self.rows} row masks, got {len(masks)}")
        limit = 1 << self.cols
        for mask in masks:
            if not 0 <= mask < limit:
                raise ValueError(f"row mask {mask} out of range for {self.cols} columns")
        object.__setattr__(self, "masks", masks)

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]]) -> ZeroOneMatrix:
        if not data or not data[0]:
            raise ValueError("matrix must be at least 1x1")
        cols = len(data[0])
        masks = []
        for i, row in enumerate(data):
            if len(row) != cols:
                raise ValueError(f"row {i + 1} has {len(row)} entries, expected {cols}")
            mask = 0
            for j, v in enumerate(row):
                if v not in (0, 1):
                    raise ValueError(f"entry ({i + 1},{j + 1}) is {v!r}, not 0 or 1")
                if v:
                    mask |= 1 << j
            masks.append(mask)
        return cls(len(data), cols, tuple(masks))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> ZeroOneMatrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def ones(cls, rows: int, cols: int | None = None) -> ZeroOneMatrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, ((1 << cols) - 1,) * rows)

    @classmethod
    def identity(cls, n: int) -> ZeroOneMatrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def order(self) -> int:
        """Order of a square matrix (``rows`` otherwise)."""
        return self.rows

    def entry(self, i: int, j: int) -> int:
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"entry ({i},{j}) outside {self.rows}x{self.cols}")
        return (self.masks[i - 1] >> (j - 1)) & 1

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entry(*ij)

    def to_rows(self) -> list[list[int]]:
        return [[(m >> j) & 1 for j in range(self.cols)] for m in self.masks]

    def ones_positions(self) -> list[tuple[int, int]]:
        return [(i + 1, j + 1) for i, m in enumerate(self.masks) for j in _bits(m)]

    def count_ones(self) -> int:
        return sum(bin(m).count("1") for m in self.masks)

    def count_zeros(self) -> int:
        return self.rows * self.cols - self.count_ones()

    def transpose(self) -> ZeroOneMatrix:
        masks = [0] * self.cols
        for i, m in enumerate(self.masks):
            for j in _bits(m):
                masks[j] |= 1 << i
        return ZeroOneMatrix(self.cols, self.rows, tuple(masks))

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> ZeroOneMatrix:
        """Rows ``row_idx`` and columns ``col_idx`` (1-based, in the given order)."""
        masks = []
        for i in row_idx:
            src = self.masks[i - 1]
            mask = 0
            for k, j in enumerate(col_idx):
                if (src >> (j - 1)) & 1:
                    mask |= 1 << k
            masks.append(mask)
        return ZeroOneMatrix(len(row_idx), len(col_idx), tuple(masks))

    def permute(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> ZeroOneMatrix:
        """Matrix whose entry ``(r, c)`` is ``x[row_perm[r], col_perm[c]]``."""
        if sorted(row_perm) != list(range(1, self.rows + 1)):
            raise ValueError(f"{list(row_perm)} is not a permutation of 1..{self.rows}")
        if sorted(col_perm) != list(range(1, self.cols + 1)):
            raise ValueError(f"{list(col_perm)} is not a permutation of 1..{self.cols}")
        return self.submatrix(row_perm, col_perm)

    def strike(self, i: int, j: int) -> ZeroOneMatrix:
        """The minor obtained by deleting row ``i`` and column ``j``."""
        rows = [r for r in range(1, self.rows + 1) if r != i]
        cols = [c for c in range(1, self.cols + 1) if c != j]
        return self.submatrix(rows, cols)

    def __str__(self) -> str:
        return format_matrix(self)


@dataclass(frozen=True)
class BipartiteGraph:
    """``G = (A, B, E)`` with ``A = {a_1..a_m}``, ``B = {b_1..b_n}``.

    ``edges`` holds pairs ``(i, j)`` meaning ``a_i b_j``.  Isolated vertices
    are allowed, and so are empty sides (components of isolated vertices).
    """

    a_count: int
    b_count: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.a_count < 0 or self.b_count < 0:
            raise ValueError("vertex counts must be non-negative")
        raw = self.edges
        edges = frozenset((int(i), int(j)) for i, j in raw)
        if not isinstance(raw, (set, frozenset)) and len(edges) != len(list(raw)):
            raise ValueError("duplicate edges")
        for i, j in edges:
            if not (1 <= i <= self.a_count and 1 <= j <= self.b_count):
                raise ValueError(f"edge ({i},{j}) outside {self.a_count}+{self.b_count} vertices")
        object.__setattr__(self, "edges", edges)

    @cached_property
    def a_masks(self) -> tuple[int, ...]:
        """Bitmask of ``N(a_i)`` for each ``i`` (bit ``j - 1`` for ``b_j``)."""
        masks = [0] * self.a_count
        for i, j in self.edges:
            masks[i - 1] |= 1 << (j - 1)
        return tuple(masks)

    @cached_property
    def b_masks(self) -> tuple[int, ...]:
        masks = [0] * self.b_count
        for i, j in self.edges:
            masks[j - 1] |= 1 << (i - 1)
        return tuple(masks)

    @property
    def is_balanced(self) -> bool:
        return self.a_count == self.b_count

    @property
    def vertex_count(self) -> int:
        return self.a_count + self.b_count

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edges

    def neighbors_of_a(self, i: int) -> list[int]:
        return [j + 1 for j in _bits(self.a_masks[i - 1])]

    def neighbors_of_b(self, j: int) -> list[int]:
        return [i + 1 for i in _bits(self.b_masks[j - 1])]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class VertexSet:
    a_members: frozenset[int] = frozenset()
    b_members: frozenset[int] = frozenset()

    def __post_init__(self):
        for name in ("a_members", "b_members"):
            raw = getattr(self, name)
            members = frozenset(raw)
            if not isinstance(raw, (set, frozenset)) and len(members) != len(list(raw)):
                raise ValueError(f"duplicate vertices in {name}")
            if any(v < 1 for v in members):
                raise ValueError(f"{name} must hold 1-based indices")
            object.__setattr__(self, name, members)

    @classmethod
    def side_a(cls, g: BipartiteGraph) -> VertexSet:
        return cls(frozenset(range(1, g.a_count + 1)), frozenset())

    @classmethod
    def side_b(cls, g: BipartiteGraph) -> VertexSet:
        return cls(frozenset(), frozenset(range(1, g.b_count + 1)))

    def __len__(self) -> int:
        return len(self.a_members) + len(self.b_members)

    def sort_key(self) -> tuple:
        """Lexicographic key over the vertex order ``a_1 < ... < a_m < b_1 < ...``."""
        return tuple(sorted([("a", i) for i in self.a_members] + [("b", j) for j in self.b_members]))

    def is_valid_for(self, g: BipartiteGraph) -> bool:
        return all(i <= g.a_count for i in self.a_members) and all(
            j <= g.b_count for j in self.b_members
        )

    def __str__(self) -> str:
        names = [f"a{i}" for i in sorted(self.a_members)] + [f"b{j}" for j in sorted(self.b_members)]
        return "{" + ",".join(names) + "}"


@dataclass(frozen=True)
class Matching:
    pairs: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        pairs = frozenset(self.pairs)
        if len({i for i, _ in pairs}) != len(pairs) or len({j for _, j in pairs}) != len(pairs):
            raise ValueError("matching pairs share an endpoint")
        object.__setattr__(self, "pairs", pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __contains__(self, edge) -> bool:
        return edge in self.pairs

    def is_valid_for(self, g: BipartiteGraph) -> bool:
        return self.pairs <= g.edges

    def is_perfect_for(self, g: BipartiteGraph) -> bool:
        return self.is_valid_for(g) and len(self) == g.a_count == g.b_count


@dataclass(frozen=True)
class Subgraph:
    """An induced subgraph relabelled to ``1..k`` on each side.

    ``a_labels[k - 1]`` is the original index of local vertex ``a_k``.
    """

    graph: BipartiteGraph
    a_labels: tuple[int, ...]
    b_labels: tuple[int, ...]

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    def original_edges(self) -> set[tuple[int, int]]:
        return {(self.a_labels[i - 1], self.b_labels[j - 1]) for i, j in self.graph.edges}


def from_graph(g: BipartiteGraph) -> ZeroOneMatrix:
    """Reduced adjacency matrix of ``g``."""
    return ZeroOneMatrix(g.a_count, g.b_count, g.a_masks)


def to_graph(x: ZeroOneMatrix) -> BipartiteGraph:
    return BipartiteGraph(x.rows, x.cols, frozenset(x.ones_positions()))


def as_rows(obj: Union[BipartiteGraph, ZeroOneMatrix]) -> tuple[tuple[int, ...], int]:
    """Row bitmasks and column count of a graph or matrix."""
    if isinstance(obj, ZeroOneMatrix):
        return obj.masks, obj.cols
    if isinstance(obj, BipartiteGraph):
        return obj.a_masks, obj.b_count
    raise TypeError(f"expected BipartiteGraph or ZeroOneMatrix, got {type(obj).__name__}")


def induced_subgraph(g: BipartiteGraph, a_keep: Iterable[int], b_keep: Iterable[int]) -> Subgraph:
    a_labels = tuple(sorted(set(a_keep)))
    b_labels = tuple(sorted(set(b_keep)))
    a_pos = {v: k + 1 for k, v in enumerate(a_labels)}
    b_pos = {v: k + 1 for k, v in enumerate(b_labels)}
    edges = frozenset(
        (a_pos[i], b_pos[j]) for i, j in g.edges if i in a_pos and j in b_pos
    )
    return Subgraph(BipartiteGraph(len(a_labels), len(b_labels), edges), a_labels, b_labels)


def remove_vertices(g: BipartiteGraph, a_drop: Iterable[int] = (), b_drop: Iterable[int] = ()) -> Subgraph:
    """``G - W`` for a vertex set ``W``; e.g. ``G - a - b``."""
    a_drop, b_drop = set(a_drop), set(b_drop)
    return induced_subgraph(
        g,
        (i for i in range(1, g.a_count + 1) if i not in a_drop),
        (j for j in range(1, g.b_count + 1) if j not in b_drop),
    )


def connected_components(g: BipartiteGraph) -> list[Subgraph]:
    """Components in order of their first vertex under ``a_1 < ... < b_1 < ...``.

    Isolated vertices form singleton components.  Stacking the components'
    matrices in this order gives the block-diagonal form of the whole matrix.
    """
    seen_a = [False] * g.a_count
    seen_b = [False] * g.b_count
    starts = [("a", i) for i in range(g.a_count)] + [("b", j) for j in range(g.b_count)]
    out = []
    for side, v in starts:
        if (seen_a if side == "a" else seen_b)[v]:
            continue
        comp_a, comp_b = [], []
        queue = deque([(side, v)])
        (seen_a if side == "a" else seen_b)[v] = True
        while queue:
            s, u = queue.popleft()
            if s == "a":
                comp_a.append(u + 1)
                for w in _bits(g.a_masks[u]):
                    if not seen_b[w]:
                        seen_b[w] = True
                        queue.append(("b", w))
            else:
                comp_b.append(u + 1)
                for w in _bits(g.b_masks[u]):
                    if not seen_a[w]:
                        seen_a[w] = True
                        queue.append(("a", w))
        out.append(induced_subgraph(g, comp_a, comp_b))
    return out


def is_connected(g: BipartiteGraph) -> bool:
    return len(connected_components(g)) <= 1


def neighborhood(g: BipartiteGraph, s: VertexSet) -> VertexSet:
    """``N(S)``: B-neighbours of ``S ∩ A`` together with A-neighbours of ``S ∩ B``."""
    if not s.is_valid_for(g):
        raise ValueError(f"{s} is not a vertex set of this graph")
    nb = 0
    for i in s.a_members:
        nb |= g.a_masks[i - 1]
    na = 0
    for j in s.b_members:
        na |= g.b_masks[j - 1]
    return VertexSet(frozenset(k + 1 for k in _bits(na)), frozenset(k + 1 for k in _bits(nb)))


# --- text formats ---------------------------------------------------------

_TOKEN = re.compile(r"\S+")


def _tokens(line: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def _header(lines: list[str]) -> tuple[int, int]:
    if not lines:
        raise ParseError("empty input", 1)
    toks = _tokens(lines[0])
    if len(toks) != 2:
        raise ParseError(f"header needs two integers, found {len(toks)} tokens", 1)
    values = []
    for tok, col in toks:
        if not tok.isdigit():
            raise ParseError(f"expected a decimal integer, found {tok!r}", 1, col)
        if int(tok) < 1:
            raise ParseError(f"dimension must be at least 1, found {tok}", 1, col)
        values.append(int(tok))
    return values[0], values[1]


def _body(text: str) -> list[str]:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    return lines


def parse_matrix(text: str) -> ZeroOneMatrix:
    """Parse the ``.01m`` format: ``m n`` then ``m`` rows of ``n`` tokens ``0``/``1``."""
    lines = _body(text)
    m, n = _header(lines)
    if len(lines) - 1 != m:
        where = min(len(lines), m + 1) + 1
        raise ParseError(f"expected {m} matrix rows, found {len(lines) - 1}", where)
    masks = []
    for lineno, line in enumerate(lines[1:], start=2):
        toks = _tokens(line)
        mask = 0
        for k, (tok, col) in enumerate(toks):
            if tok not in ("0", "1"):
                raise ParseError(f"expected 0 or 1, found {tok!r}", lineno, col)
            if k >= n:
                raise ParseError(f"row has more than {n} entries", lineno, col)
            if tok == "1":
                mask |= 1 << k
        if len(toks) != n:
            raise ParseError(f"row has {len(toks)} entries, expected {n}", lineno, len(line) + 1)
        masks.append(mask)
    return ZeroOneMatrix(m, n, tuple(masks))


def format_matrix(x: ZeroOneMatrix) -> str:
    out = [f"{x.rows} {x.cols}"]
    out.extend(" ".join(str(v) for v in row) for row in x.to_rows())
    return "\n".join(out) + "\n"


def parse_edge_list(text: str) -> BipartiteGraph:
    """Parse the ``.bge`` format: ``|A| |B|`` then one ``i j`` edge per line."""
    lines = _body(text)
    m, n = _header(lines)
    edges: set[tuple[int, int]] = set()
    for lineno, line in enumerate(lines[1:], start=2):
        toks = _tokens(line)
        if len(toks) != 2:
            raise ParseError(f"edge line needs two integers, found {len(toks)} tokens", lineno)
        (ti, ci), (tj, cj) = toks
        for tok, col in toks:
            if not tok.isdigit():
                raise ParseError(f"expected a decimal integer, found {tok!r}", lineno, col)
        i, j = int(ti), int(tj)
        if not 1 <= i <= m:
            raise ParseError(f"vertex a{i} outside 1..{m}", lineno, ci)
        if not 1 <= j <= n:
            raise ParseError(f"vertex b{j} outside 1..{n}", lineno, cj)
        if (i, j) in edges:
            raise ParseError(f"duplicate edge {i} {j}", lineno, ci)
        edges.add((i, j))
    return BipartiteGraph(m, n, frozenset(edges))


def format_edge_list(g: BipartiteGraph) -> str:
    out = [f"{g.a_count} {g.b_count}"]
    out.extend(f"{i} {j}" for i, j in g.sorted_edges())
    return "\n".join(out) + "\n"


def load(path: str | Path, as_: str | None = None) -> Union[ZeroOneMatrix, BipartiteGraph]:
    """Read a ``.01m`` or ``.bge`` file; ``as_`` (``"01m"``/``"bge"``) overrides the suffix."""
    path = Path(path)
    kind = as_ or path.suffix.lstrip(".")
    text = path.read_text()
    if kind == "01m":
        return parse_matrix(text)
    if kind == "bge":
        return parse_edge_list(text)
    raise ValueError(f"cannot tell the format of {path}; use .01m/.bge or pass as_")
