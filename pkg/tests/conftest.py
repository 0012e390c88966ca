from fractions import Fraction

import pytest

from addmin.core import ProblemInstance, parse_decimal


def R(text) -> Fraction:
    return parse_decimal(str(text))


def vec(*values):
    return tuple(R(v) for v in values)


WORKED_A = [["0.4", "0.6", "0.5"], ["0.7", "0.5", "0.8"]]
WORKED_B = ["1.4", "1.5"]


@pytest.fixture
def worked():
    return ProblemInstance.from_values(WORKED_A, WORKED_B)


def segment(cell):
    """Point-set signature of a cell of dimension <= 1:
    ``(endpoint_a, closed_a, endpoint_b, closed_b)`` with endpoints sorted."""
    if cell.dim == 0:
        p = tuple(cell.origin)
        return (p, True, p, True)
    assert cell.dim == 1
    lo, lo_s, hi, hi_s = cell.param_interval()
    a, b = (cell.point([lo]), not lo_s), (cell.point([hi]), not hi_s)
    if b[0] < a[0]:
        a, b = b, a
    return (a[0], a[1], b[0], b[1])


def family(points, closed):
    """Signature of a worked-style family given its two endpoints."""
    (p, q), (cp, cq) = points, closed
    p, q = vec(*p), vec(*q)
    if q < p:
        p, q, cp, cq = q, p, cq, cp
    return (p, cp, q, cq)


# acceptance summary: one line per criterion, printed at the end of the run
_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    key = marker.args[0]
    ok = call.excinfo is None
    prev = _acceptance.get(key, (True, marker.args[1]))
    _acceptance[key] = (prev[0] and ok, marker.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_acceptance, key=int):
        ok, title = _acceptance[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {title}")
