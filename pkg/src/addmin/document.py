"""JSON instance documents.

Numerals may be JSON strings (``"0.4"``) or bare number tokens; number
tokens are intercepted as raw text before any float conversion.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import InstanceError, ParseError, ProblemInstance, as_rat, parse_decimal
from .render import fmt


def _numeral(value, where: str):
    try:
        return as_rat(value)
    except ParseError as exc:
        raise ParseError(f"{where}: {exc}") from None


def instance_from_json(text: str) -> ProblemInstance:
    try:
        doc = json.loads(text, parse_float=parse_decimal, parse_int=parse_decimal)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "A" not in doc or "b" not in doc:
        raise InstanceError('instance must be a JSON object with keys "A" and "b"')
    A, b = doc["A"], doc["b"]
    if not isinstance(A, list) or not all(isinstance(r, list) for r in A):
        raise InstanceError('"A" must be a list of rows')
    if not isinstance(b, list):
        raise InstanceError('"b" must be a list')
    rows = [[_numeral(v, f"A[{i + 1}][{j + 1}]") for j, v in enumerate(r)] for i, r in enumerate(A)]
    rhs = [_numeral(v, f"b[{i + 1}]") for i, v in enumerate(b)]
    return ProblemInstance.from_values(rows, rhs, name=doc.get("name"), description=doc.get("description"))


def load_instance(path) -> ProblemInstance:
    return instance_from_json(Path(path).read_text())


def instance_to_dict(instance: ProblemInstance) -> dict:
    doc = {}
    if instance.name is not None:
        doc["name"] = instance.name
    if instance.description is not None:
        doc["description"] = instance.description
    doc["A"] = [[fmt(a) for a in row] for row in instance.A]
    doc["b"] = [fmt(v) for v in instance.b]
    return doc


def instance_to_json(instance: ProblemInstance) -> str:
    return json.dumps(instance_to_dict(instance), indent=2, ensure_ascii=False) + "\n"


def parse_vector(text: str) -> tuple:
    """``"0.3,1,0.7"`` -> exact tuple."""
    return tuple(parse_decimal(tok) for tok in text.split(","))
