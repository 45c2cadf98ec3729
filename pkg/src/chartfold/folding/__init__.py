"""Fox 3-colourings and the 3-fold folding of colored braid closures."""

from .colorings import (
    COLORS,
    ColorVector,
    apply_braid,
    check_coloring,
    color_dynamics,
    fox_colorings,
    is_closure_coloring,
    parse_color_vector,
)
from .fold import (
    FoldResult,
    FoldState,
    FoldStep,
    StrandState,
    block_chart,
    braid_phase,
    fold3,
    simplify_words,
    termination_measure,
)
from .surgery import Op, block_ops, cancel_node_pairs, chart_of, rewrite_moves

__all__ = [
    "COLORS",
    "ColorVector",
    "FoldResult",
    "FoldState",
    "FoldStep",
    "Op",
    "StrandState",
    "apply_braid",
    "block_chart",
    "block_ops",
    "braid_phase",
    "cancel_node_pairs",
    "chart_of",
    "check_coloring",
    "color_dynamics",
    "fold3",
    "fox_colorings",
    "is_closure_coloring",
    "parse_color_vector",
    "rewrite_moves",
    "simplify_words",
    "termination_measure",
]
