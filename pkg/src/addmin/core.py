"""Exact scalars, the problem instance and the addition-min composition.

Every quantity is a :class:`fractions.Fraction`; decimal input is parsed from
its text so that ``"0.4"`` becomes ``2/5`` and never a binary float.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction

_NUMERAL = re.compile(
    r"""^[+-]?(
        (\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?   # decimal, optional exponent
        |\d+/\d+                             # exact ratio p/q
    )$""",
    re.VERBOSE,
)


class AddMinError(Exception):
    """Base class for every error raised by this package."""


class ParseError(AddMinError, ValueError):
    pass


class DomainError(AddMinError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class InstanceError(AddMinError, ValueError):
    pass


def parse_decimal(text: str) -> Rat:
    """Parse a decimal numeral (or ``p/q``) into an exact rational.

    >>> parse_decimal("0.4")
    Fraction(2, 5)
    """
    if not isinstance(text, str):
        raise ParseError(f"expected a numeral string, got {text!r}")
    token = text.strip()
    if not _NUMERAL.match(token):
        raise ParseError(f"malformed numeral {text!r}")
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"malformed numeral {text!r}") from exc


def as_rat(value) -> Rat:
    """Coerce ints, Fractions and numeral strings; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a numeral: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_decimal(value)
    raise ParseError(f"refusing inexact value {value!r}; pass a string or Fraction")


def as_vector(values: Iterable) -> tuple[Rat, ...]:
    return tuple(as_rat(v) for v in values)


@dataclass(frozen=True)
class ProblemInstance:
    """The system ``sum_j min(a_ij, x_j) = b_i`` for every row ``i``.

    ``A`` is stored row-major as a tuple of tuples. Construction validates
    shape, ``0 <= a_ij <= 1`` and ``b_i > 0``.
    """

    A: tuple[tuple[Rat, ...], ...]
    b: tuple[Rat, ...]
    name: str | None = field(default=None, compare=False)
    description: str | None = field(default=None, compare=False)

    def __post_init__(self):
        A = tuple(as_vector(row) for row in self.A)
        b = as_vector(self.b)
        if not A or not A[0]:
            raise InstanceError("A must have at least one row and one column")
        n = len(A[0])
        for i, row in enumerate(A):
            if len(row) != n:
                raise InstanceError(f"row {i + 1} of A has {len(row)} entries, expected {n}")
            for j, a in enumerate(row):
                if not 0 <= a <= 1:
                    raise InstanceError(f"a[{i + 1}][{j + 1}] = {a} is outside [0, 1]")
        if len(b) != len(A):
            raise InstanceError(f"b has {len(b)} entries but A has {len(A)} rows")
        for i, bi in enumerate(b):
            if bi <= 0:
                raise InstanceError(f"b[{i + 1}] = {bi} must be positive")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def m(self) -> int:
        return len(self.A)

    @property
    def n(self) -> int:
        return len(self.A[0])

    def column(self, j: int) -> tuple[Rat, ...]:
        return tuple(row[j] for row in self.A)

    @classmethod
    def from_values(cls, A, b, **meta) -> "ProblemInstance":
        """Build from nested lists of strings / ints / Fractions."""
        return cls(tuple(tuple(row) for row in A), tuple(b), **meta)


def _check_length(instance: ProblemInstance, x: Sequence[Rat]) -> None:
    if len(x) != instance.n:
        raise DomainError(f"x has {len(x)} entries, expected {instance.n}")


def evaluate(instance: ProblemInstance, x: Sequence[Rat]) -> tuple[Rat, ...]:
    """Row-wise ``sum_j min(a_ij, x_j)``."""
    _check_length(instance, x)
    return tuple(sum((min(a, xj) for a, xj in zip(row, x)), Fraction(0)) for row in instance.A)


def is_solution(instance: ProblemInstance, x: Sequence[Rat]) -> bool:
    _check_length(instance, x)
    for j, xj in enumerate(x):
        if not 0 <= xj <= 1:
            raise DomainError(f"x[{j + 1}] = {xj} is outside [0, 1]")
    return evaluate(instance, x) == instance.b


@dataclass(frozen=True)
class BoundVectors:
    alpha_check: tuple[Rat, ...]  # lower bound of every solution
    alpha_hat: tuple[Rat, ...]  # column maxima; upper bound of every minimal solution


def bounds(instance: ProblemInstance) -> BoundVectors:
    row_sums = [sum(row, Fraction(0)) for row in instance.A]
    alpha_hat = tuple(max(instance.column(j)) for j in range(instance.n))
    alpha_check = tuple(
        max([Fraction(0)] + [bi - (s - row[j]) for row, bi, s in zip(instance.A, instance.b, row_sums)])
        for j in range(instance.n)
    )
    return BoundVectors(alpha_check, alpha_hat)


@dataclass(frozen=True)
class Precheck:
    """Cheap necessary conditions. ``reasons`` empty means possibly solvable."""

    reasons: tuple[str, ...] = ()

    @property
    def possibly_solvable(self) -> bool:
        return not self.reasons

    @property
    def infeasible(self) -> bool:
        return bool(self.reasons)


def precheck(instance: ProblemInstance, bv: BoundVectors | None = None) -> Precheck:
    """Necessary conditions only: an infeasible verdict is definitive, the
    converse is not a guarantee."""
    from .render import fmt

    bv = bv or bounds(instance)
    reasons = []
    for j, (lo, hi) in enumerate(zip(bv.alpha_check, bv.alpha_hat), start=1):
        if lo > hi:
            reasons.append(f"alpha_check[{j}]={fmt(lo)} > alpha_hat[{j}]={fmt(hi)}")
        if lo > 1:
            reasons.append(f"alpha_check[{j}]={fmt(lo)} > 1")
    for i, (row, bi) in enumerate(zip(instance.A, instance.b), start=1):
        s = sum(row, Fraction(0))
        if bi > s:
            reasons.append(f"b[{i}]={fmt(bi)} > row sum {fmt(s)}")
    return Precheck(tuple(reasons))
