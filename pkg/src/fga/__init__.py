"""Arithmetic, decomposition and order on flow graphs."""

from .algebra import (
    is_left_prime,
    is_prime,
    is_right_prime,
    left_divide,
    nat,
    oplus,
    otimes,
    plus,
    right_divide,
    scalar_multiple,
    scalar_power,
    times,
)
from .config import Budget
from .core import (
    FlowGraph,
    Kind,
    VertexMap,
    are_isomorphic,
    canonical_key,
    classify,
    is_st_flow_graph,
    isomorphic,
    new_flow_graph,
    trivial,
)
from .decomposition import (
    canonical_decomposition,
    is_s_standard,
    is_t_standard,
    rank,
    split_at,
    splitting_vertices,
    st_core,
)
from .fgio import parse_fg, read_fg, to_dot, write_fg
from .order import strong_leq, weak_leq

__version__ = "0.1.0"

__all__ = [
    "Budget", "FlowGraph", "Kind", "VertexMap",
    "are_isomorphic", "canonical_decomposition", "canonical_key", "classify",
    "is_left_prime", "is_prime", "is_right_prime", "is_s_standard", "is_st_flow_graph",
    "is_t_standard", "isomorphic", "left_divide", "nat", "new_flow_graph", "oplus",
    "otimes", "parse_fg", "plus", "rank", "read_fg", "right_divide", "scalar_multiple",
    "scalar_power", "split_at", "splitting_vertices", "st_core", "strong_leq", "times",
    "to_dot", "trivial", "weak_leq", "write_fg",
]
