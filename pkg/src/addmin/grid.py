"""Per-coordinate breakpoint grids and the index spaces of both enumerations."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import AddMinError, BoundVectors, ProblemInstance, Rat

DEFAULT_MAX_CELLS = 1_000_000

MINIMAL = "min"
MAXIMAL = "max"


class _Infinity:
    """Index marking a coordinate pinned to 1 in a maximal-kind tuple."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "∞"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


class PreconditionError(AddMinError):
    pass


class CapExceededError(AddMinError):
    def __init__(self, total: int, cap: int):
        super().__init__(f"index space has {total} tuples, above the cap of {cap}")
        self.total = total
        self.cap = cap


@dataclass(frozen=True)
class ThresholdGrid:
    q: tuple[Rat, ...]  # q[0] = alpha_check_j, then distinct a_ij above it
    in_J_star: bool

    @property
    def t(self) -> int:
        return len(self.q) - 1


def build_grids(instance: ProblemInstance, bv: BoundVectors) -> list[ThresholdGrid]:
    grids = []
    for j in range(instance.n):
        lo, hi = bv.alpha_check[j], bv.alpha_hat[j]
        if lo > hi:
            raise PreconditionError(f"alpha_check[{j + 1}]={lo} exceeds alpha_hat[{j + 1}]={hi}")
        above = sorted({a for a in instance.column(j) if a > lo})
        grids.append(ThresholdGrid((lo, *above), in_J_star=lo == hi))
    return grids


@dataclass(frozen=True)
class IndexSpace:
    kind: str
    lists: tuple[tuple, ...]

    @property
    def total_count(self) -> int:
        return math.prod(len(lst) for lst in self.lists)


def build_index_space(
    grids: Sequence[ThresholdGrid], kind: str, max_cells: int = DEFAULT_MAX_CELLS
) -> IndexSpace:
    if kind == MINIMAL:
        lists = tuple((0,) if g.in_J_star else tuple(range(1, g.t + 1)) for g in grids)
    elif kind == MAXIMAL:
        lists = tuple((INF,) if g.in_J_star else (*range(1, g.t + 1), INF) for g in grids)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    space = IndexSpace(kind, lists)
    total = space.total_count
    if total > max_cells:
        raise CapExceededError(total, max_cells)
    return space


def iterate_indices(space: IndexSpace) -> Iterator[tuple]:
    """Lexicographic over coordinates, each list in stored order (INF last)."""
    return itertools.product(*space.lists)
