"""Spanning trees and convex subgraphs of square cycles C_n^2."""

from .convexity import (
    ConvexLabel,
    ContractViolation,
    Variant,
    catalog,
    classify,
    closure,
    enumerate_convex,
    is_convex,
    is_convex_wrt,
)
from .fibonacci import fib, fib_square_sum_identity
from .graph_core import (
    CyclicIndex,
    DomainError,
    EdgeId,
    EdgeKind,
    EdgeSet,
    StripGraph,
    Triangle,
    escape_route,
    is_connected,
    square_cycle,
    strip_graph,
    strip_with_tails,
    triangle,
    windows_only,
)
from .treecount import (
    count_formula,
    count_matrix_tree,
    count_strip,
    count_strip_with_tails,
    decompose,
    enumerate_spanning_trees,
)

__version__ = "0.1.0"
