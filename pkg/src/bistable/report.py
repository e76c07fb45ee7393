"""The full property vector of one matrix or graph, as printed by ``bistable analyze``."""
from __future__ import annotations

import json
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from .core import BipartiteGraph, ZeroOneMatrix, connected_components, from_graph, to_graph
from .errors import PermanentOverflow, TooLarge
from .matching import classify_edges, has_total_support, term_rank
from .permanent import permanent
from .structure import (
    bistable_components,
    block_triangular_form,
    count_unit_blocks,
    cross_block_edges,
    is_fully_indecomposable,
    maximum_stable_set,
    stability_report,
)

__all__ = ["AnalysisReport", "StableSetModel", "analyze", "SCHEMA_VERSION"]

SCHEMA_VERSION = 1


class StableSetModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    a: list[int]
    b: list[int]


class AnalysisReport(BaseModel):
    """Every field is always present; ``null`` means "not applicable" or, when
    the field name is listed in ``suppressed``, "over a size guard"."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    input: str
    rows: int
    cols: int
    connected: bool
    components: int
    term_rank: int
    permanent: Optional[int]
    alpha: int
    maximum_stable_set: StableSetModel
    has_perfect_matching: bool
    fully_indecomposable: Optional[bool]
    total_support: Optional[bool]
    bistable: bool
    alpha_plus: Optional[bool]
    alpha_minus: Optional[bool]
    alpha_stable: Optional[bool]
    forced_edges: Optional[list[tuple[int, int]]]
    allowed_edge_count: Optional[int]
    block_sizes: Optional[list[int]]
    unit_block_count: Optional[int]
    row_perm: Optional[list[int]]
    col_perm: Optional[list[int]]
    bistable_components: Optional[list[int]]
    cross_block_edges: Optional[list[tuple[int, int]]]
    suppressed: list[str]

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)

    def to_text(self) -> str:
        """One ``key: value`` line per field; each value is the JSON encoding."""
        data = self.model_dump(mode="json", by_alias=True)
        return "".join(f"{key}: {json.dumps(value)}\n" for key, value in data.items())

    @classmethod
    def from_text(cls, text: str) -> "AnalysisReport":
        data = {}
        for line in text.splitlines():
            key, _, value = line.partition(": ")
            data[key] = json.loads(value)
        return cls.model_validate(data)


def analyze(
    obj: Union[ZeroOneMatrix, BipartiteGraph], input_id: str = "-", limit: Optional[int] = None
) -> AnalysisReport:
    """Compute the report; ``limit`` caps the exhaustive deciders (vertex count)."""
    if isinstance(obj, ZeroOneMatrix):
        x, g = obj, to_graph(obj)
    else:
        x, g = from_graph(obj), obj
    square = x.is_square
    suppressed: list[str] = []
    rho = term_rank(g)
    has_pm = square and rho == x.rows

    per = None
    if square:
        try:
            per = permanent(x)
        except (TooLarge, PermanentOverflow):
            suppressed.append("permanent")

    stab = stability_report(g, limit)
    for name, value in (("alpha_plus", stab.is_alpha_plus), ("alpha_minus", stab.is_alpha_minus)):
        if value is None:
            suppressed.append(name)
    if stab.is_alpha is None:
        suppressed.append("alpha_stable")

    fields: dict = dict(
        forced_edges=None,
        allowed_edge_count=None,
        block_sizes=None,
        unit_block_count=None,
        row_perm=None,
        col_perm=None,
        bistable_components=None,
        cross_block_edges=None,
    )
    if has_pm:
        cls = classify_edges(g)
        btf = block_triangular_form(x)
        fields.update(
            forced_edges=sorted(cls.forced),
            allowed_edge_count=len(cls.allowed),
            block_sizes=list(btf.block_sizes),
            unit_block_count=count_unit_blocks(btf),
            row_perm=list(btf.row_perm),
            col_perm=list(btf.col_perm),
            bistable_components=[p.graph.vertex_count for p in bistable_components(g)],
            cross_block_edges=cross_block_edges(g, btf),
        )

    s = maximum_stable_set(g)
    component_count = len(connected_components(g))
    return AnalysisReport(
        input=input_id,
        rows=x.rows,
        cols=x.cols,
        connected=component_count <= 1,
        components=component_count,
        term_rank=rho,
        permanent=per,
        alpha=stab.alpha,
        maximum_stable_set=StableSetModel(a=sorted(s.a_members), b=sorted(s.b_members)),
        has_perfect_matching=has_pm,
        fully_indecomposable=is_fully_indecomposable(x) if square else None,
        total_support=has_total_support(x) if square else None,
        bistable=stab.is_bistable,
        alpha_plus=stab.is_alpha_plus,
        alpha_minus=stab.is_alpha_minus,
        alpha_stable=stab.is_alpha,
        suppressed=suppressed,
        **fields,
    )
