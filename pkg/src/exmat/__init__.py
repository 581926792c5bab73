"""Exact desk-scale computations for forbidden 0-1 matrix patterns.

The package computes weight and column extremal values of 0-1 matrices
avoiding fixed patterns (exact branch-and-bound plus independent brute
oracles), generates the named pattern families and lower-bound
constructions used to certify those values, and reduces matrices to bar
visibility hypergraphs with exact rational sweep geometry.
"""

from .matrix import (
    ColumnRange,
    DegeneratePatternError,
    Matrix01,
    PatternSet,
    avoids_all,
    column_ranges,
    contains,
    contains_oracle,
    flip_h,
    flip_v,
    format_matrix,
    format_pattern_set,
    has_identity_or_row_pair,
    is_light,
    is_range_overlapping,
    parse_matrix,
    parse_pattern_set,
)
from .patterns import TrsParams, generate_T, pattern_L, pattern_P, permutation_matrix
from .search import (
    UNBOUNDED,
    ColumnExtremalQuery,
    ExtremalResult,
    OracleSizeError,
    UnknownBoundError,
    check_column_bound_from_linear_weight,
    check_monotonicity,
    check_range_overlap_inequality,
    check_rect_square_max,
    ex_columns,
    ex_weight,
    ex_weight_oracle,
)
from .constructions import (
    ColumnGraph,
    InductionState,
    build_column_graph,
    cluster_split,
    coloring_induction_step,
    construct_K_prime,
    degree_growth_bound,
    greedy_coloring,
    induction_base,
    lower_bound_witness,
    pigeonhole_witness,
)
from .visibility import (
    Bar,
    BarLayout,
    LayoutError,
    VisEdge,
    bars_at,
    check_avoider_weight_bound,
    format_layout,
    matrix_to_visibility,
    parse_layout,
    sweep_edges,
    sweep_edges_oracle,
    witness_is_exact,
)
from .render import layout_svg

__version__ = "0.1.0"
