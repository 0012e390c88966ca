"""Enumeration of minimal and maximal solutions and the full solution set.

Every solution lies between a minimal and a maximal one, and any point
between two solutions is itself a solution, so the solution set is the
union of the order intervals ``[x_min, x_max]`` over the enumerated cells.
Minimal solutions found here are also minimal for the inequality system
``A (+)min x >= b``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import partial
from typing import Sequence

from .core import DomainError, Precheck, ProblemInstance, Rat, bounds, is_solution, precheck
from .grid import (
    DEFAULT_MAX_CELLS,
    MAXIMAL,
    MINIMAL,
    build_grids,
    build_index_space,
    iterate_indices,
)
from .subsystem import (
    SolutionCell,
    build_maximal_system,
    build_minimal_system,
    point_cell,
    solve_box_system,
)

ALPHA_CHECK_IS_SOLUTION = "alpha_check_is_solution"
ALL_ONES_IS_SOLUTION = "all_ones_is_solution"


@dataclass(frozen=True)
class Enumeration:
    """Outcome of one enumeration run.

    ``outcomes`` pairs every visited index tuple with its cell or None; it is
    empty when the precheck failed or a shortcut fired.
    """

    kind: str
    cells: tuple[SolutionCell, ...]
    outcomes: tuple[tuple[tuple, SolutionCell | None], ...] = ()
    shortcut: str | None = None
    precheck: Precheck = field(default_factory=Precheck)


def _solve_one(instance, grids, kind, index):
    build = build_minimal_system if kind == MINIMAL else build_maximal_system
    return solve_box_system(build(instance, grids, index))


def _solve_all(instance, grids, kind, indices, workers):
    job = partial(_solve_one, instance, grids, kind)
    if workers and workers > 1 and len(indices) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map preserves input order, so output order matches the sequential run
            results = list(pool.map(job, indices, chunksize=max(1, len(indices) // (4 * workers))))
    else:
        results = [job(index) for index in indices]
    return tuple(zip(indices, results))


def _enumerate(instance, kind, max_cells, use_shortcut, workers) -> Enumeration:
    bv = bounds(instance)
    verdict = precheck(instance, bv)
    if verdict.infeasible:
        return Enumeration(kind, (), precheck=verdict)
    if use_shortcut:
        if kind == MINIMAL and is_solution(instance, bv.alpha_check):
            return Enumeration(kind, (point_cell(kind, bv.alpha_check),), shortcut=ALPHA_CHECK_IS_SOLUTION)
        ones = (Fraction(1),) * instance.n
        if kind == MAXIMAL and is_solution(instance, ones):
            return Enumeration(kind, (point_cell(kind, ones),), shortcut=ALL_ONES_IS_SOLUTION)
    grids = build_grids(instance, bv)
    space = build_index_space(grids, kind, max_cells)
    outcomes = _solve_all(instance, grids, kind, list(iterate_indices(space)), workers)
    cells = tuple(cell for _, cell in outcomes if cell is not None)
    return Enumeration(kind, cells, outcomes, precheck=verdict)


def run_minimal(
    instance: ProblemInstance,
    max_cells: int = DEFAULT_MAX_CELLS,
    use_shortcut: bool = True,
    workers: int | None = None,
) -> Enumeration:
    return _enumerate(instance, MINIMAL, max_cells, use_shortcut, workers)


def run_maximal(
    instance: ProblemInstance,
    max_cells: int = DEFAULT_MAX_CELLS,
    use_shortcut: bool = True,
    workers: int | None = None,
) -> Enumeration:
    return _enumerate(instance, MAXIMAL, max_cells, use_shortcut, workers)


def enumerate_minimal(instance: ProblemInstance, max_cells: int = DEFAULT_MAX_CELLS, **kw) -> list[SolutionCell]:
    """Nonempty minimal-kind cells in index-tuple order."""
    return list(run_minimal(instance, max_cells, **kw).cells)


def enumerate_maximal(instance: ProblemInstance, max_cells: int = DEFAULT_MAX_CELLS, **kw) -> list[SolutionCell]:
    """Nonempty maximal-kind cells in index-tuple order."""
    return list(run_maximal(instance, max_cells, **kw).cells)


def _require_solution(instance, x) -> tuple[Rat, ...]:
    x = tuple(Fraction(v) for v in x)
    if not is_solution(instance, x):
        raise DomainError("x is not a solution of the system")
    return x


def is_minimal(instance: ProblemInstance, x: Sequence[Rat]) -> bool:
    """A solution is minimal iff every x_j is at most some a_ij."""
    x = _require_solution(instance, x)
    return all(any(xj <= a for a in instance.column(j)) for j, xj in enumerate(x))


def is_maximal(instance: ProblemInstance, x: Sequence[Rat]) -> bool:
    """A solution is maximal iff every x_j < 1 is strictly below some a_ij."""
    x = _require_solution(instance, x)
    return all(xj == 1 or any(xj < a for a in instance.column(j)) for j, xj in enumerate(x))


def minimal_below(instance: ProblemInstance, x: Sequence[Rat]) -> tuple[Rat, ...]:
    """Lower every coordinate exceeding its column maximum to that maximum."""
    x = _require_solution(instance, x)
    col_max = bounds(instance).alpha_hat
    return tuple(min(xj, cm) for xj, cm in zip(x, col_max))


def maximal_above(instance: ProblemInstance, x: Sequence[Rat]) -> tuple[Rat, ...]:
    """Raise to 1 every coordinate already at or above its column maximum."""
    x = _require_solution(instance, x)
    col_max = bounds(instance).alpha_hat
    return tuple(Fraction(1) if xj >= cm else xj for xj, cm in zip(x, col_max))


def is_solvable(instance: ProblemInstance, max_cells: int = DEFAULT_MAX_CELLS) -> bool:
    return bool(enumerate_minimal(instance, max_cells))


@dataclass(frozen=True)
class SolutionSetDescription:
    """All minimal and maximal cells of an instance.

    When solvable, the solution set equals the union over pairs
    ``(x_min, x_max)`` drawn from ``minimal_cells`` and ``maximal_cells`` of
    ``{x in [0,1]^n | x_min <= x <= x_max}``. This is reporting output;
    membership is decided by :func:`addmin.core.is_solution`.
    """

    minimal_cells: tuple[SolutionCell, ...]
    maximal_cells: tuple[SolutionCell, ...]
    solvable: bool
    shortcut: tuple[str, ...] = ()
    minimal_run: Enumeration | None = field(default=None, compare=False, repr=False)
    maximal_run: Enumeration | None = field(default=None, compare=False, repr=False)


def describe_solution_set(
    instance: ProblemInstance, max_cells: int = DEFAULT_MAX_CELLS, workers: int | None = None
) -> SolutionSetDescription:
    lo = run_minimal(instance, max_cells, workers=workers)
    hi = run_maximal(instance, max_cells, workers=workers)
    solvable = bool(lo.cells)
    return SolutionSetDescription(
        minimal_cells=lo.cells,
        maximal_cells=hi.cells,
        solvable=solvable,
        shortcut=tuple(s for s in (lo.shortcut, hi.shortcut) if s),
        minimal_run=lo,
        maximal_run=hi,
    )


def lower_corner(instance: ProblemInstance, cell: SolutionCell) -> SolutionCell:
    """Image of a maximal-kind cell under :func:`minimal_below`.

    Points of a maximal cell exceed a column maximum only on coordinates
    pinned to 1, so the image is the same family with those coordinates
    moved down to the column maximum.
    """
    col_max = bounds(instance).alpha_hat
    origin = tuple(
        min(x0, cm) if not any(row) else x0 for x0, row, cm in zip(cell.origin, cell.directions, col_max)
    )
    return replace(
        cell,
        kind=MINIMAL,
        origin=origin,
        witness=tuple(min(w, cm) for w, cm in zip(cell.witness, col_max)),
    )
