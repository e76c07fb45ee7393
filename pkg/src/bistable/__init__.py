"""Structure of (0,1)-matrices through their bipartite graphs."""
from .core import (
    BipartiteGraph,
    Matching,
    Subgraph,
    VertexSet,
    ZeroOneMatrix,
    connected_components,
    from_graph,
    load,
    neighborhood,
    to_graph,
)
from .errors import (
    BistableError,
    DimensionMismatch,
    NoPerfectMatching,
    NotSquare,
    ParseError,
    PermanentOverflow,
    TooLarge,
    Unbalanced,
    UnknownFixture,
)
from .generators import fixture
from .matching import classify_edges, has_perfect_matching, has_total_support, maximum_matching
from .permanent import all_minor_permanents_positive, count_perfect_matchings, permanent
from .products import boolean_product, graph_kronecker, join, kronecker_product
from .report import AnalysisReport, analyze
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
    stability_number,
)

__version__ = "0.1.0"
