"""Treewidth and pathwidth: exact solvers, heuristics, validation, nice form."""

from .decomposition import (
    PathDecomposition,
    TreeDecomposition,
    Violation,
    WidthCertificate,
    join_decompositions,
    validate_decomposition,
)
from .exact import (
    DEFAULT_CUTOFF,
    CutoffExceeded,
    contraction_degeneracy,
    degeneracy,
    exact_pathwidth,
    exact_treewidth,
    exact_width,
)
from .heuristic import (
    STRATEGIES,
    decomposition_from_ordering,
    elimination_ordering,
    heuristic_pathwidth,
    heuristic_treewidth,
    heuristic_width,
    path_from_layout,
)
from .nice import KINDS, NiceTreeDecomposition, check_nice, count_join_bags, smooth, to_nice

__all__ = [
    "CutoffExceeded",
    "DEFAULT_CUTOFF",
    "KINDS",
    "NiceTreeDecomposition",
    "PathDecomposition",
    "STRATEGIES",
    "TreeDecomposition",
    "Violation",
    "WidthCertificate",
    "check_nice",
    "contraction_degeneracy",
    "count_join_bags",
    "decomposition_from_ordering",
    "degeneracy",
    "elimination_ordering",
    "exact_pathwidth",
    "exact_treewidth",
    "exact_width",
    "heuristic_pathwidth",
    "heuristic_treewidth",
    "heuristic_width",
    "join_decompositions",
    "path_from_layout",
    "smooth",
    "to_nice",
    "validate_decomposition",
]
