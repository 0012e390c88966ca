import itertools
from fractions import Fraction

import pytest

from addmin.core import ProblemInstance, bounds, evaluate, is_solution
from addmin.enumeration import is_maximal, is_minimal
from addmin.grid import INF, ThresholdGrid, build_grids, build_index_space, iterate_indices
from addmin.oracle import random_solvable_instance, sample_cell
from addmin.subsystem import (
    GridConsistencyError,
    build_maximal_system,
    build_minimal_system,
    solve_box_system,
)

from conftest import family, segment, vec


def grids_of(instance):
    return build_grids(instance, bounds(instance))


def linear_rows(system):
    return [(row.coeffs, row.constant, row.rhs) for row in system.rows]


def test_minimal_system_112(worked):
    s = build_minimal_system(worked, grids_of(worked), (1, 1, 2))
    assert [(b.lower, b.upper, b.lower_strict, b.upper_strict) for b in s.bounds] == [
        (*vec("0.3", "0.4"), False, False), (*vec("0.5", "0.6"), False, False), (*vec("0.5", "0.8"), False, False)]
    # x1 + x2 + 0.5 = 1.4 ; x1 + 0.5 + x3 = 1.5
    assert linear_rows(s) == [((1, 1, 0), Fraction(1, 2), Fraction(7, 5)), ((1, 0, 1), Fraction(1, 2), Fraction(3, 2))]


def test_minimal_system_211(worked):
    s = build_minimal_system(worked, grids_of(worked), (2, 1, 1))
    assert [(b.lower, b.upper) for b in s.bounds] == [vec("0.4", "0.7"), vec("0.5", "0.6"), vec("0.4", "0.5")]
    assert linear_rows(s) == [((0, 1, 1), Fraction(2, 5), Fraction(7, 5)), ((1, 0, 1), Fraction(1, 2), Fraction(3, 2))]


def test_minimal_system_fixed_only():
    inst = ProblemInstance.from_values([["0.5"]], ["0.5"])
    s = build_minimal_system(inst, grids_of(inst), (0,))
    assert s.fixed == {0: Fraction(1, 2)} and s.free == ()
    assert linear_rows(s) == [((), Fraction(1, 2), Fraction(1, 2))]
    cell = solve_box_system(s)
    assert cell.dim == 0 and cell.witness == vec("0.5")


def test_maximal_systems(worked):
    g = grids_of(worked)
    s = build_maximal_system(worked, g, (1, INF, 2))
    assert s.fixed == {1: 1}
    assert [(b.lower, b.upper, b.upper_strict) for b in s.bounds] == [
        (*vec("0.3", "0.4"), True), (*vec("0.5", "0.8"), True)]
    assert linear_rows(s) == [((1, 0), Fraction(11, 10), Fraction(7, 5)), ((1, 1), Fraction(1, 2), Fraction(3, 2))]
    s = build_maximal_system(worked, g, (2, INF, 2))
    assert linear_rows(s)[0] == ((0, 0), Fraction(3, 2), Fraction(7, 5))
    s = build_maximal_system(worked, g, (INF, INF, INF))
    assert linear_rows(s) == [((), Fraction(3, 2), Fraction(7, 5)), ((), Fraction(2), Fraction(3, 2))]
    assert solve_box_system(s) is None


def test_grid_consistency_guard(worked):
    bogus = [ThresholdGrid(vec("0.3", "0.7"), False)] + grids_of(worked)[1:]
    with pytest.raises(GridConsistencyError):
        build_minimal_system(worked, bogus, (1, 1, 1))


def test_solve_worked_cells(worked):
    g = grids_of(worked)
    cell = solve_box_system(build_minimal_system(worked, g, (1, 1, 2)))
    assert segment(cell) == family((("0.3", "0.6", "0.7"), ("0.4", "0.5", "0.6")), (True, True))
    assert cell.witness == vec("0.35", "0.55", "0.65")
    assert is_solution(worked, cell.witness)
    assert solve_box_system(build_minimal_system(worked, g, (1, 1, 1))) is None
    point = solve_box_system(build_maximal_system(worked, g, (1, INF, 2)))
    assert point.dim == 0 and point.witness == vec("0.3", "1", "0.7")


def test_cell_endpoints_exact(worked):
    g = grids_of(worked)
    for k in iterate_indices(build_index_space(g, "min")):
        cell = solve_box_system(build_minimal_system(worked, g, k))
        if cell is None or cell.dim != 1:
            continue
        lo, _, hi, _ = cell.param_interval()
        for t in (lo, hi):
            assert evaluate(worked, cell.point([t])) == worked.b


def _instances(count, m=3, n=3):
    for seed in range(count):
        yield random_solvable_instance(seed, 1 + seed % m, 1 + (seed // m) % n)[0]


@pytest.mark.parametrize("kind", ["min", "max"])
def test_cells_sound(kind):
    classify = is_minimal if kind == "min" else is_maximal
    build = build_minimal_system if kind == "min" else build_maximal_system
    for inst in _instances(60):
        g = grids_of(inst)
        for idx in iterate_indices(build_index_space(g, kind)):
            cell = solve_box_system(build(inst, g, idx))
            if cell is None:
                continue
            for p in sample_cell(cell, 0, 6):
                assert is_solution(inst, p) and classify(inst, p)


def test_strict_limit_points_not_maximal_or_covered(worked):
    g = grids_of(worked)
    cells = [c for idx in iterate_indices(build_index_space(g, "max"))
             if (c := solve_box_system(build_maximal_system(worked, g, idx)))]
    for cell in cells:
        if cell.dim != 1:
            continue
        lo, lo_s, hi, hi_s = cell.param_interval()
        for t, strict in ((lo, lo_s), (hi, hi_s)):
            if not strict:
                continue
            x = cell.point([t])
            assert not cell.contains(x)
            assert is_solution(worked, x)
            assert not is_maximal(worked, x) or any(o.contains(x) for o in cells if o is not cell)


def _box_search(system, step):
    """Try every point of a step-``step`` grid inside the system's bounds."""
    axes = []
    for b in system.bounds:
        k0 = -(-b.lower // step)
        vals = []
        k = k0
        while k * step <= b.upper:
            v = k * step
            if not (b.upper_strict and v == b.upper) and not (b.lower_strict and v == b.lower):
                vals.append(v)
            k += 1
        axes.append(vals)
    for combo in itertools.product(*axes):
        if all(sum((c * v for c, v in zip(row.coeffs, combo)), row.constant) == row.rhs for row in system.rows):
            return combo
    return None


def test_empty_is_definitive(worked):
    checked = 0
    cases = [(worked, Fraction(1, 100))] + [(inst, Fraction(1, 60)) for inst in _instances(40, 2, 2)]
    for inst, step in cases:
        g = grids_of(inst)
        for kind, build in (("min", build_minimal_system), ("max", build_maximal_system)):
            for idx in iterate_indices(build_index_space(g, kind)):
                system = build(inst, g, idx)
                cell = solve_box_system(system)
                found = _box_search(system, step)
                if cell is None:
                    checked += 1
                    assert found is None, (idx, found)
    assert checked >= 14
