"""Box-constrained linear subsystems for one index tuple, solved exactly.

Fixing a grid segment for every coordinate turns each ``min(a_ij, x_j)``
into either ``x_j`` or the constant ``a_ij``, so a tuple yields a linear
system with 0/1 coefficients plus interval bounds. Its exact solution set is
returned as a :class:`SolutionCell`.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Mapping, Sequence

from .core import AddMinError, ProblemInstance, Rat
from .grid import INF, MAXIMAL, MINIMAL, ThresholdGrid
from .linalg import Constraint, back_substitute, gauss_jordan, project, variable_interval

ZERO = Fraction(0)
ONE = Fraction(1)


class GridConsistencyError(AddMinError):
    """An a_ij falls strictly inside a grid segment; impossible for grids
    produced by :func:`addmin.grid.build_grids`."""


@dataclass(frozen=True)
class VariableBound:
    lower: Rat
    lower_strict: bool
    upper: Rat
    upper_strict: bool


@dataclass(frozen=True)
class EqualityRow:
    """``sum(coeffs[p] * x[free[p]]) + constant == rhs``."""

    coeffs: tuple[int, ...]
    constant: Rat
    rhs: Rat


@dataclass(frozen=True)
class BoxLinearSystem:
    kind: str
    index: tuple
    n: int
    fixed: Mapping[int, Rat]
    free: tuple[int, ...]
    bounds: tuple[VariableBound, ...]  # aligned with ``free``
    rows: tuple[EqualityRow, ...]


def _delta(a: Rat, q_lower: Rat, q_upper: Rat, i: int, j: int) -> int:
    if a >= q_upper:
        return 1
    if a <= q_lower:
        return 0
    raise GridConsistencyError(f"a[{i + 1}][{j + 1}]={a} lies strictly inside ({q_lower}, {q_upper})")


def _build(instance, grids, index, kind, pinned, pinned_value, strict_upper):
    if len(index) != instance.n or len(grids) != instance.n:
        raise ValueError(f"index tuple {index} does not match n={instance.n}")
    fixed = {j: pinned_value(j) for j in range(instance.n) if pinned(j)}
    free = tuple(j for j in range(instance.n) if j not in fixed)
    segment = {}
    for j in free:
        k, q = index[j], grids[j].q
        if not isinstance(k, int) or not 1 <= k <= grids[j].t:
            raise ValueError(f"index {k} is not a segment of coordinate {j + 1}")
        segment[j] = (q[k - 1], q[k])
    bnds = tuple(VariableBound(segment[j][0], False, segment[j][1], strict_upper) for j in free)
    rows = []
    for i, (row, bi) in enumerate(zip(instance.A, instance.b)):
        coeffs = []
        constant = sum((min(row[j], v) for j, v in fixed.items()), ZERO)
        for j in free:
            dlt = _delta(row[j], *segment[j], i, j)
            coeffs.append(dlt)
            if not dlt:
                constant += row[j]
        rows.append(EqualityRow(tuple(coeffs), constant, bi))
    return BoxLinearSystem(kind, tuple(index), instance.n, fixed, free, bnds, tuple(rows))


def build_minimal_system(
    instance: ProblemInstance, grids: Sequence[ThresholdGrid], k: Sequence[int]
) -> BoxLinearSystem:
    """Coordinates in J* are fixed at their lower bound; the others range
    over the closed segment ``[q[k_j - 1], q[k_j]]``."""
    for j, g in enumerate(grids):
        if (k[j] == 0) != g.in_J_star:
            raise ValueError(f"k[{j + 1}]={k[j]} inconsistent with J* membership")
    return _build(
        instance, grids, k, MINIMAL,
        pinned=lambda j: grids[j].in_J_star,
        pinned_value=lambda j: grids[j].q[0],
        strict_upper=False,
    )


def build_maximal_system(
    instance: ProblemInstance, grids: Sequence[ThresholdGrid], m: Sequence
) -> BoxLinearSystem:
    """Coordinates with index INF are pinned to 1; the others range over the
    half-open segment ``[q[m_j - 1], q[m_j])``."""
    return _build(
        instance, grids, m, MAXIMAL,
        pinned=lambda j: m[j] is INF,
        pinned_value=lambda j: ONE,
        strict_upper=True,
    )


@dataclass(frozen=True)
class SolutionCell:
    """The set ``{origin + directions @ t | t satisfies constraints}``.

    Each parameter equals one coordinate (``params[k]``) minus its origin
    entry, which makes membership an exact direct check.
    """

    kind: str
    index: tuple | None
    origin: tuple[Rat, ...]
    directions: tuple[tuple[Rat, ...], ...]  # n rows, dim columns
    constraints: tuple[Constraint, ...]
    witness: tuple[Rat, ...]
    params: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.params)

    def point(self, t: Sequence[Rat]) -> tuple[Rat, ...]:
        return tuple(
            x0 + sum((d * v for d, v in zip(row, t)), ZERO) for x0, row in zip(self.origin, self.directions)
        )

    def parameters_of(self, x: Sequence[Rat]) -> tuple[Rat, ...] | None:
        """The parameter vector mapping to ``x``, or None if ``x`` is off the
        cell's affine hull."""
        if len(x) != len(self.origin):
            return None
        t = tuple(Fraction(x[j]) - self.origin[j] for j in self.params)
        return t if self.point(t) == tuple(x) else None

    def contains(self, x: Sequence[Rat]) -> bool:
        t = self.parameters_of(x)
        return t is not None and all(c.holds(t) for c in self.constraints)

    def param_interval(self):
        """``(lo, lo_strict, hi, hi_strict)`` of a one-parameter cell."""
        if self.dim != 1:
            raise ValueError("param_interval is defined for one-parameter cells only")
        return variable_interval(self.constraints, [])


def point_cell(kind: str, x: Sequence[Rat], index=None) -> SolutionCell:
    x = tuple(Fraction(v) for v in x)
    return SolutionCell(kind, index, x, tuple(() for _ in x), (), x, ())


def solve_box_system(system: BoxLinearSystem) -> SolutionCell | None:
    """Exact solution set of ``system`` or None when it is empty.

    Equalities are reduced to ``x = x0 + D t``; the box bounds become
    constraints on ``t`` whose feasibility is settled by Fourier-Motzkin.
    The witness takes the midpoint of each parameter's interval in turn.
    """
    free = system.free
    f = len(free)
    mat = [list(row.coeffs) for row in system.rows]
    rhs = [row.rhs - row.constant for row in system.rows]
    # pivot on rarely used, high-index variables first so that shared,
    # low-index variables become the parameters
    counts = [sum(1 for r in mat if r[p]) for p in range(f)]
    order = sorted(range(f), key=lambda p: (counts[p], -free[p]))
    reduced = gauss_jordan(mat, rhs, order)
    if reduced is None:
        return None

    pivot_cols = {pcol for pcol, _, _ in reduced}
    param_pos = [p for p in range(f) if p not in pivot_cols]
    d = len(param_pos)
    origin = [ZERO] * system.n
    directions = [[ZERO] * d for _ in range(system.n)]
    for j, v in system.fixed.items():
        origin[j] = Fraction(v)
    for k, p in enumerate(param_pos):
        directions[free[p]][k] = ONE
    for pcol, row, c in reduced:
        j = free[pcol]
        origin[j] = c
        for k, p in enumerate(param_pos):
            directions[j][k] = -row[p]

    constraints = []
    for p, bnd in enumerate(system.bounds):
        j = free[p]
        drow = tuple(directions[j])
        constraints.append(Constraint(tuple(-v for v in drow), origin[j] - bnd.lower, bnd.lower_strict))
        constraints.append(Constraint(drow, bnd.upper - origin[j], bnd.upper_strict))
    stages = project(constraints, d)
    if stages is None:
        return None

    t = back_substitute(stages)
    cell = SolutionCell(
        kind=system.kind,
        index=system.index,
        origin=tuple(origin),
        directions=tuple(tuple(r) for r in directions),
        constraints=tuple(stages[d]),
        witness=(),
        params=tuple(free[p] for p in param_pos),
    )
    return replace(cell, witness=cell.point(t))
