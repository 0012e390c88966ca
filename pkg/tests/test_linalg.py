"""Elimination checks against brute-force oracles."""

import itertools
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from addmin.linalg import Constraint, back_substitute, gauss_jordan, project

F = Fraction


def test_gauss_jordan_worked_case():
    # x1 + x2 = 0.9, x1 + x3 = 1 ; pivots chosen on x3 then x2
    out = gauss_jordan([[1, 1, 0], [1, 0, 1]], [F(9, 10), F(1)], [2, 1, 0])
    assert sorted((p, tuple(r), c) for p, r, c in out) == [
        (1, (1, 1, 0), F(9, 10)),
        (2, (1, 0, 1), F(1)),
    ]


def test_gauss_jordan_inconsistent():
    assert gauss_jordan([[1, 0, 1], [1, 0, 1]], [F(4, 5), F(1)], [0, 1, 2]) is None
    assert gauss_jordan([[0, 0]], [F(1)], [0, 1]) is None
    assert gauss_jordan([[0, 0]], [F(0)], [0, 1]) == []


def test_strict_interval():
    # 0.3 < t < 0.4 and t <= 0.4: open on the left, open on the right
    cons = [Constraint((F(-1),), F(-3, 10), True), Constraint((F(1),), F(2, 5), True),
            Constraint((F(1),), F(2, 5), False)]
    stages = project(cons, 1)
    assert stages is not None
    (t,) = back_substitute(stages)
    assert t == F(7, 20)


def test_degenerate_strict_is_empty():
    # t >= 0.5 and t < 0.5
    cons = [Constraint((F(-1),), F(-1, 2)), Constraint((F(1),), F(1, 2), True)]
    assert project(cons, 1) is None
    # t >= 0.5 and t <= 0.5 is a point
    cons[1] = Constraint((F(1),), F(1, 2))
    assert back_substitute(project(cons, 1)) == [F(1, 2)]


def _feasible_by_search(cons, box):
    """Exact 2-D oracle: closure vertices, then midpoints and centroids of
    them; a nonempty convex region contains one of these candidates."""
    lines = list(cons) + box
    verts = set()
    for c1, c2 in itertools.combinations(lines, 2):
        (a, b), (c, d) = c1.coeffs, c2.coeffs
        det = a * d - b * c
        if det == 0:
            continue
        p = ((c1.rhs * d - b * c2.rhs) / det, (a * c2.rhs - c * c1.rhs) / det)
        if all(k.coeffs[0] * p[0] + k.coeffs[1] * p[1] <= k.rhs for k in lines):
            verts.add(p)
    verts = list(verts)
    cands = list(verts)
    cands += [((p[0] + q[0]) / 2, (p[1] + q[1]) / 2) for p, q in itertools.combinations(verts, 2)]
    cands += [((p[0] + q[0] + r[0]) / 3, (p[1] + q[1] + r[1]) / 3) for p, q, r in itertools.combinations(verts, 3)]
    return any(all(k.holds(p) for k in lines) for p in cands)


coef = st.integers(-3, 3).map(F)
rhs = st.integers(-6, 6).map(lambda k: F(k, 2))
constraint = st.builds(Constraint, st.tuples(coef, coef), rhs, st.booleans())


@given(st.lists(constraint, min_size=1, max_size=5))
@settings(max_examples=300)
def test_fourier_motzkin_matches_search(cons):
    box = [Constraint((F(1), F(0)), F(2)), Constraint((F(-1), F(0)), F(2)),
           Constraint((F(0), F(1)), F(2)), Constraint((F(0), F(-1)), F(2))]
    stages = project(list(cons) + box, 2)
    assert (stages is not None) == _feasible_by_search(cons, box)
    if stages is not None:
        t = back_substitute(stages)
        assert all(c.holds(t) for c in list(cons) + box)
