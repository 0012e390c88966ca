"""Brute-force cross-checks for the enumeration results.

Nothing here touches the grid, subsystem or elimination code: the oracle
evaluates the equations itself, classifies solutions by trying breakpoint
moves of single coordinates, and finds cell corners by solving small square
systems directly.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import DomainError, ProblemInstance, Rat
from .enumeration import SolutionSetDescription, is_maximal, is_minimal, maximal_above, minimal_below
from .render import fmt_vector
from .subsystem import SolutionCell

EPS = Fraction(1, 1000)
ZERO = Fraction(0)
ONE = Fraction(1)
MAX_CORNER_SUBSETS = 5000


class OracleInconsistency(AssertionError):
    """The breakpoint search and the closed-form test disagree."""


def _row_sums(instance: ProblemInstance, x: Sequence[Rat]) -> list[Rat]:
    out = []
    for row in instance.A:
        s = ZERO
        for a, v in zip(row, x):
            s += a if a < v else v
        out.append(s)
    return out


def _solves(instance, x) -> bool:
    return all(0 <= v <= 1 for v in x) and _row_sums(instance, x) == list(instance.b)


def _require(instance, x):
    x = [Fraction(v) for v in x]
    if len(x) != instance.n or not _solves(instance, x):
        raise DomainError(f"{fmt_vector(x)} is not a solution")
    return x


def _probe_values(points: set, start: Rat, step: Rat) -> list[Rat]:
    # breakpoints, midpoints between neighbours, and one epsilon step
    pts = sorted(points | {start})
    mids = {(a + b) / 2 for a, b in zip(pts, pts[1:])}
    eps = start + step
    return sorted((points | mids | ({eps} if 0 <= eps <= 1 else set())) - {start})


def _movable(instance, x, j, direction: int) -> bool:
    xj = x[j]
    col = instance.column(j)
    if direction < 0:
        breakpoints = {ZERO} | {a for a in col if a < xj}
        probes = [v for v in _probe_values(breakpoints, xj, -EPS) if v < xj]
        closed = all(a < xj for a in col)
    else:
        breakpoints = {ONE} | {a for a in col if a > xj}
        probes = [v for v in _probe_values(breakpoints, xj, EPS) if v > xj]
        closed = xj < 1 and all(a <= xj for a in col)
    found = False
    for v in probes:
        y = list(x)
        y[j] = v
        if _solves(instance, y):
            found = True
            break
    if found != closed:
        raise OracleInconsistency(f"coordinate {j + 1} of {fmt_vector(x)}: search={found} closed-form={closed}")
    return found


def coordinate_decrease_oracle(instance: ProblemInstance, x: Sequence[Rat]) -> bool:
    """True iff no single coordinate of the solution ``x`` can be lowered.

    By order convexity a smaller solution exists iff some single-coordinate
    decrease is one, so this decides minimality.
    """
    x = _require(instance, x)
    return not any(_movable(instance, x, j, -1) for j in range(instance.n) if x[j] > 0)


def coordinate_increase_oracle(instance: ProblemInstance, x: Sequence[Rat]) -> bool:
    """True iff no single coordinate of the solution ``x`` can be raised."""
    x = _require(instance, x)
    return not any(_movable(instance, x, j, +1) for j in range(instance.n) if x[j] < 1)


def random_solvable_instance(seed: int, m: int, n: int, grid_step: Rat = Fraction(1, 10)):
    """Random instance on a value grid with a planted solution.

    Uses ``random.Random`` (MT19937) so output is identical for equal seeds
    on every platform.
    """
    grid_step = Fraction(grid_step)
    if m < 1 or n < 1 or not 0 < grid_step <= 1:
        raise ValueError("need m, n >= 1 and 0 < grid_step <= 1")
    rng = random.Random(seed)
    top = int(1 / grid_step)

    def draw():
        return rng.randint(0, top) * grid_step

    x = [draw() for _ in range(n)]
    while not any(x):
        x = [draw() for _ in range(n)]
    A, b = [], []
    for _ in range(m):
        while True:
            row = [draw() for _ in range(n)]
            bi = sum((min(a, v) for a, v in zip(row, x)), ZERO)
            if bi > 0:
                break
        A.append(row)
        b.append(bi)
    return ProblemInstance.from_values(A, b), tuple(x)


def _solve_square(rows, rhs):
    n = len(rows)
    aug = [list(r) + [c] for r, c in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col] / aug[col][col]
                aug[r] = [u - f * v for u, v in zip(aug[r], aug[col])]
    return [aug[i][n] / aug[i][i] for i in range(n)]


def _satisfies(c, t, closure=False):
    lhs = sum((u * v for u, v in zip(c.coeffs, t)), ZERO)
    return lhs <= c.rhs if (closure or not c.strict) else lhs < c.rhs


def closure_vertices(cell: SolutionCell) -> list[tuple[Rat, ...]]:
    """Vertices of the closure of the cell's parameter region (strict
    constraints relaxed), found by intersecting every d-subset."""
    d = cell.dim
    if d == 0:
        return [()]
    cons = list(cell.constraints)
    subsets = itertools.combinations(range(len(cons)), d)
    found = []
    for subset in itertools.islice(subsets, MAX_CORNER_SUBSETS):
        t = _solve_square([cons[i].coeffs for i in subset], [cons[i].rhs for i in subset])
        if t is None or not all(_satisfies(c, t, closure=True) for c in cons):
            continue
        t = tuple(t)
        if t not in found:
            found.append(t)
    return found


def sample_cell(cell: SolutionCell, seed: int, count: int) -> list[tuple[Rat, ...]]:
    """``count`` points of a nonempty cell.

    Order: the witness, then corners that satisfy every constraint, then
    seeded points strictly between the witness and a closure corner (which
    respect strict constraints whenever the witness does).
    """
    rng = random.Random(seed)
    witness = tuple(cell.witness)
    tw = tuple(Fraction(witness[j]) - cell.origin[j] for j in cell.params)
    corners = closure_vertices(cell)
    points = [witness]
    for t in corners:
        if all(_satisfies(c, t) for c in cell.constraints):
            points.append(cell.point(t))
    while len(points) < count:
        v = corners[rng.randrange(len(corners))] if corners else tw
        lam = Fraction(rng.randint(1, 1000), 1000)
        t = tuple(lam * a + (1 - lam) * b for a, b in zip(tw, v))
        points.append(cell.point(t))
    return points[:count]


@dataclass
class VerificationReport:
    checks: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def fail(self, check: str, point=None, detail: str = "") -> None:
        self.counterexamples.append(
            {"check": check, "point": None if point is None else fmt_vector(point), "detail": detail}
        )

    def lines(self) -> list[str]:
        out = [f"checks: {self.checks}", f"counterexamples: {len(self.counterexamples)}"]
        for c in self.counterexamples:
            out.append(f"  {c['check']}: {c['point']} {c['detail']}".rstrip())
        return out


def _check_cells(instance, cells, kind, seed, report, samples):
    classify = is_minimal if kind == "min" else is_maximal
    oracle = coordinate_decrease_oracle if kind == "min" else coordinate_increase_oracle
    pool = []
    for idx, cell in enumerate(cells):
        report.checks += 1
        if not cell.contains(cell.witness):
            report.fail(f"{kind}-cell witness outside its cell", cell.witness, f"cell #{idx + 1}")
        for p in sample_cell(cell, seed + idx, samples):
            report.checks += 1
            if not _solves(instance, p):
                report.fail(f"{kind}-cell point is not a solution", p, f"cell #{idx + 1}")
                continue
            if not classify(instance, p):
                report.fail(f"{kind}-cell point fails classifier", p, f"cell #{idx + 1}")
            if not oracle(instance, p):
                report.fail(f"{kind}-cell point fails coordinate oracle", p, f"cell #{idx + 1}")
            pool.append(p)
    return pool


def verify_description(
    instance: ProblemInstance,
    description: SolutionSetDescription,
    seed: int = 0,
    trials: int = 100,
    samples: int = 5,
    extra_solutions: Sequence[Sequence[Rat]] = (),
) -> VerificationReport:
    """Sample-based check of a description; failures become report entries."""
    report = VerificationReport()
    rng = random.Random(seed)
    lows, highs = description.minimal_cells, description.maximal_cells

    report.checks += 1
    if description.solvable != bool(lows) or (not lows and highs):
        report.fail("solvable flag inconsistent with cells", None,
                    f"solvable={description.solvable} minimal={len(lows)} maximal={len(highs)}")

    pool = _check_cells(instance, lows, "min", seed, report, samples)
    pool += _check_cells(instance, highs, "max", seed + 7919, report, samples)
    pool += [tuple(Fraction(v) for v in x) for x in extra_solutions if _solves(instance, x)]
    if not pool:
        return report

    for _ in range(trials):
        base = pool[rng.randrange(len(pool))]
        lo, hi = minimal_below(instance, base), maximal_above(instance, base)
        y = tuple(a + Fraction(rng.randint(0, 20), 20) * (b - a) for a, b in zip(lo, hi))
        report.checks += 1
        if not _solves(instance, y):
            report.fail("point between sandwich corners is not a solution", y)
            continue
        _check_sandwich(instance, y, lows, highs, report)

        j = rng.randrange(instance.n)
        z = list(y)
        z[j] += EPS if rng.random() < 0.5 else -EPS
        if not 0 <= z[j] <= 1:
            continue
        report.checks += 1
        if _solves(instance, z):
            _check_sandwich(instance, z, lows, highs, report)
        elif any(c.contains(z) for c in (*lows, *highs)):
            report.fail("non-solution lies inside a cell", z)
    return report


def _check_sandwich(instance, y, lows, highs, report):
    lo, hi = minimal_below(instance, y), maximal_above(instance, y)
    report.checks += 1
    if not all(a <= v <= b for a, v, b in zip(lo, y, hi)):
        report.fail("sandwich order violated", y)
    if not any(c.contains(lo) for c in lows):
        report.fail("minimal_below lands in no minimal cell", lo, f"from {fmt_vector(y)}")
    if not any(c.contains(hi) for c in highs):
        report.fail("maximal_above lands in no maximal cell", hi, f"from {fmt_vector(y)}")
