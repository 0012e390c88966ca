"""Exact solver for fuzzy relation equations with addition-min composition.

Given ``A`` (m x n, entries in [0, 1]) and ``b > 0``, the package finds
every minimal and maximal solution of ``sum_j min(a_ij, x_j) = b_i`` as
parametric cells and describes the solution set as a union of order
intervals between them. All arithmetic is exact (``fractions.Fraction``).
"""

from .core import (
    AddMinError,
    BoundVectors,
    DomainError,
    InstanceError,
    ParseError,
    ProblemInstance,
    bounds,
    evaluate,
    is_solution,
    parse_decimal,
    precheck,
)
from .enumeration import (
    SolutionSetDescription,
    describe_solution_set,
    enumerate_maximal,
    enumerate_minimal,
    is_maximal,
    is_minimal,
    is_solvable,
    maximal_above,
    minimal_below,
)
from .grid import INF, CapExceededError, build_grids, build_index_space, iterate_indices
from .subsystem import SolutionCell, build_maximal_system, build_minimal_system, solve_box_system

__all__ = [
    "AddMinError",
    "BoundVectors",
    "CapExceededError",
    "DomainError",
    "INF",
    "InstanceError",
    "ParseError",
    "ProblemInstance",
    "SolutionCell",
    "SolutionSetDescription",
    "bounds",
    "build_grids",
    "build_index_space",
    "build_maximal_system",
    "build_minimal_system",
    "describe_solution_set",
    "enumerate_maximal",
    "enumerate_minimal",
    "evaluate",
    "is_maximal",
    "is_minimal",
    "is_solution",
    "is_solvable",
    "iterate_indices",
    "maximal_above",
    "minimal_below",
    "parse_decimal",
    "precheck",
    "solve_box_system",
]
