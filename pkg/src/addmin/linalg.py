"""Exact Gauss-Jordan elimination and Fourier-Motzkin projection.

Inequalities carry a strictness flag: ``coeffs . t < rhs`` or ``<=``.
A combination of two inequalities is strict iff either parent is.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

ZERO = Fraction(0)


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    rhs: Fraction
    strict: bool = False

    def lhs(self, t: Sequence[Fraction]) -> Fraction:
        return sum((c * v for c, v in zip(self.coeffs, t)), ZERO)

    def holds(self, t: Sequence[Fraction]) -> bool:
        value = self.lhs(t)
        return value < self.rhs if self.strict else value <= self.rhs


def gauss_jordan(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction], column_order: Sequence[int]
) -> list[tuple[int, list[Fraction], Fraction]] | None:
    """Reduce ``rows . x = rhs`` to reduced row echelon form.

    Columns are tried as pivots in ``column_order``. Returns
    ``[(pivot_col, row, rhs), ...]`` with each pivot column zero in every
    other returned row, or ``None`` when a row reduces to ``0 = c != 0``.
    """
    work = [(list(map(Fraction, r)), Fraction(c)) for r, c in zip(rows, rhs)]
    pivots: list[tuple[int, list[Fraction], Fraction]] = []
    for col in column_order:
        at = next((i for i, (r, _) in enumerate(work) if r[col] != 0), None)
        if at is None:
            continue
        prow, pc = work.pop(at)
        scale = prow[col]
        prow = [v / scale for v in prow]
        pc = pc / scale

        def eliminate(r, c):
            f = r[col]
            if f == 0:
                return r, c
            return [a - f * p for a, p in zip(r, prow)], c - f * pc

        work = [eliminate(r, c) for r, c in work]
        pivots = [(pcol, *eliminate(r, c)) for pcol, r, c in pivots]
        pivots.append((col, prow, pc))
    if any(c != 0 for _, c in work):
        return None
    return pivots


def _reduce(constraints: Sequence[Constraint]) -> list[Constraint] | None:
    """Scale rows, drop satisfied constant rows and keep the tightest row per
    direction. ``None`` means a constant row is violated."""
    best: dict[tuple[Fraction, ...], Constraint] = {}
    for c in constraints:
        lead = next((v for v in c.coeffs if v != 0), None)
        if lead is None:
            if c.rhs < 0 or (c.strict and c.rhs == 0):
                return None
            continue
        s = abs(lead)
        key = tuple(v / s for v in c.coeffs)
        rhs = c.rhs / s
        cur = best.get(key)
        if cur is None or rhs < cur.rhs or (rhs == cur.rhs and c.strict and not cur.strict):
            best[key] = Constraint(key, rhs, c.strict)
    return list(best.values())


def project(constraints: Sequence[Constraint], d: int) -> list[list[Constraint]] | None:
    """Eliminate variables ``d-1, ..., 0`` in turn.

    ``stages[k]`` constrains only the first ``k`` variables, so ``stages[d]``
    is the reduced input and ``stages[0]`` is empty when the region is
    nonempty. Returns ``None`` for an empty region.
    """
    current = _reduce(constraints)
    if current is None:
        return None
    stages: list[list[Constraint]] = [[] for _ in range(d + 1)]
    stages[d] = current
    for k in reversed(range(d)):
        pos = [c for c in current if c.coeffs[k] > 0]
        neg = [c for c in current if c.coeffs[k] < 0]
        derived = [c for c in current if c.coeffs[k] == 0]
        for p in pos:
            for q in neg:
                a, b = p.coeffs[k], -q.coeffs[k]
                derived.append(
                    Constraint(
                        tuple(b * u + a * v for u, v in zip(p.coeffs, q.coeffs)),
                        b * p.rhs + a * q.rhs,
                        p.strict or q.strict,
                    )
                )
        current = _reduce(derived)
        if current is None:
            return None
        stages[k] = current
    return stages


Interval = tuple[Fraction | None, bool, Fraction | None, bool]


def variable_interval(constraints: Sequence[Constraint], known: Sequence[Fraction]) -> Interval:
    """Bounds on variable ``len(known)`` once the earlier ones are fixed.

    Returns ``(lo, lo_strict, hi, hi_strict)``; a missing side is ``None``.
    """
    k = len(known)
    lo = hi = None
    lo_strict = hi_strict = False
    for c in constraints:
        a = c.coeffs[k]
        if a == 0:
            continue
        r = (c.rhs - sum((u * v for u, v in zip(c.coeffs, known)), ZERO)) / a
        if a > 0:
            if hi is None or r < hi:
                hi, hi_strict = r, c.strict
            elif r == hi:
                hi_strict = hi_strict or c.strict
        else:
            if lo is None or r > lo:
                lo, lo_strict = r, c.strict
            elif r == lo:
                lo_strict = lo_strict or c.strict
    return lo, lo_strict, hi, hi_strict


def midpoint(lo, lo_strict, hi, hi_strict) -> Fraction:
    # one-sided intervals never arise for box-bounded variables; step one unit inward
    if lo is None and hi is None:
        return ZERO
    if lo is None:
        return hi - 1 if hi_strict else hi
    if hi is None:
        return lo + 1 if lo_strict else lo
    return (lo + hi) / 2


def back_substitute(
    stages: Sequence[Sequence[Constraint]],
    pick: Callable[[Fraction | None, bool, Fraction | None, bool], Fraction] = midpoint,
) -> list[Fraction]:
    """Choose each variable in order from its interval given the earlier ones."""
    d = len(stages) - 1
    t: list[Fraction] = []
    for k in range(d):
        t.append(pick(*variable_interval(stages[k + 1], t)))
    return t
