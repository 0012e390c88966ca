"""Text and JSON renderings of rationals, cells and reports."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

MINUS = "−"


def fmt(q: Fraction) -> str:
    """Exact decimal text for terminating fractions, ``p/q`` otherwise."""
    q = Fraction(q)
    den = q.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{q.numerator}/{q.denominator}"
    digits = max(twos, fives)
    if digits == 0:
        return str(q.numerator)
    scaled = abs(q.numerator) * 10**digits // q.denominator
    whole, frac = divmod(scaled, 10**digits)
    sign = "-" if q < 0 else ""
    return f"{sign}{whole}.{str(frac).rjust(digits, '0').rstrip('0')}"


def fmt_vector(x: Sequence[Fraction]) -> str:
    return "(" + ", ".join(fmt(v) for v in x) + ")"


def fmt_index(index) -> str:
    if index is None:
        return "shortcut"
    return "(" + ",".join(str(k) for k in index) + ")"


def param_names(d: int) -> list[str]:
    return ["t"] if d == 1 else [f"t{k + 1}" for k in range(d)]


def _term(coef: Fraction, name: str, first: bool) -> str:
    mag = abs(coef)
    text = fmt(mag)
    if mag == 1:
        body = name
    elif "/" in text:
        body = f"({text}){name}"
    else:
        body = f"{text}{name}"
    if coef < 0:
        return MINUS + body
    return body if first else "+" + body


def fmt_affine(const: Fraction, coefs: Sequence[Fraction], names: Sequence[str]) -> str:
    """``0.9-t`` style rendering of ``const + sum coefs*names``."""
    parts = []
    if const != 0:
        parts.append(fmt(const).replace("-", MINUS))
    for c, name in zip(coefs, names):
        if c != 0:
            parts.append(_term(c, name, first=not parts))
    return "".join(parts) if parts else "0"


def fmt_constraint(coeffs: Sequence[Fraction], rhs: Fraction, strict: bool, names: Sequence[str]) -> str:
    lhs = fmt_affine(Fraction(0), coeffs, names)
    return f"{lhs} {'<' if strict else '≤'} {fmt(rhs)}"


def fmt_interval(lo, lo_strict, hi, hi_strict) -> str:
    left = "(" if lo_strict else "["
    right = ")" if hi_strict else "]"
    return f"{left}{fmt(lo)}, {fmt(hi)}{right}"


def format_cell(cell) -> str:
    """One-line description of a cell.

    Points print as a vector, one-parameter families in the usual
    ``(t, 0.9-t, 1-t), t ∈ [0.3, 0.4]`` form, higher dimensions list their
    parameter constraints.
    """
    d = cell.dim
    if d == 0:
        return fmt_vector(cell.origin)
    names = param_names(d)
    coords = ", ".join(
        fmt_affine(cell.origin[j], cell.directions[j], names) for j in range(len(cell.origin))
    )
    if d == 1:
        lo, lo_strict, hi, hi_strict = cell.param_interval()
        return f"({coords}), t ∈ {fmt_interval(lo, lo_strict, hi, hi_strict)}"
    cons = "; ".join(fmt_constraint(c.coeffs, c.rhs, c.strict, names) for c in cell.constraints)
    return f"({coords}), {cons}"


def index_to_json(index):
    if index is None:
        return None
    return [k if isinstance(k, int) else "inf" for k in index]


def cell_to_json(cell) -> dict:
    return {
        "source": {"kind": cell.kind, "index": index_to_json(cell.index)},
        "origin": [fmt(v) for v in cell.origin],
        "directions": [[fmt(v) for v in row] for row in cell.directions],
        "constraints": [
            {"coeffs": [fmt(v) for v in c.coeffs], "rhs": fmt(c.rhs), "rel": "lt" if c.strict else "le"}
            for c in cell.constraints
        ],
        "witness": [fmt(v) for v in cell.witness],
    }


def cell_from_json(doc: dict):
    """Inverse of :func:`cell_to_json`.

    Parameter k is recovered as the coordinate whose direction row is the
    k-th unit vector over a zero origin entry.
    """
    from .core import parse_decimal
    from .grid import INF
    from .linalg import Constraint
    from .subsystem import SolutionCell

    origin = tuple(parse_decimal(v) for v in doc["origin"])
    directions = tuple(tuple(parse_decimal(v) for v in row) for row in doc["directions"])
    d = len(directions[0]) if directions else 0
    params = []
    for k in range(d):
        unit = tuple(Fraction(int(i == k)) for i in range(d))
        params.append(next(j for j, row in enumerate(directions) if row == unit and origin[j] == 0))
    constraints = tuple(
        Constraint(tuple(parse_decimal(v) for v in c["coeffs"]), parse_decimal(c["rhs"]), c["rel"] == "lt")
        for c in doc["constraints"]
    )
    raw = doc["source"]["index"]
    index = None if raw is None else tuple(INF if k == "inf" else k for k in raw)
    return SolutionCell(doc["source"]["kind"], index, origin, directions, constraints,
                        tuple(parse_decimal(v) for v in doc["witness"]), tuple(params))
