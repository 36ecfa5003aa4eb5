"""JSON interchange: scalars as strings, matrices row-major, canonical key order."""

from __future__ import annotations

import json

from .densemat import Matrix
from .errors import InvalidField
from .exactfield import FieldSpec, Scalar
from .parray import ParameterArray


class MalformedInput(ValueError):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"invalid JSON: {e}") from e


def field_from_json(obj) -> FieldSpec:
    try:
        return FieldSpec.from_json(obj)
    except InvalidField:
        raise
    except (ValueError, TypeError) as e:
        raise MalformedInput(str(e)) from e


def scalar_from_json(text, field: FieldSpec) -> Scalar:
    if not isinstance(text, str):
        raise MalformedInput(f"scalars must be JSON strings, got {text!r}")
    try:
        return field.parse(text)
    except ZeroDivisionError:
        raise
    except ValueError as e:
        raise MalformedInput(str(e)) from e


def scalars_from_json(items, field: FieldSpec) -> list:
    if not isinstance(items, list):
        raise MalformedInput(f"expected a list of scalars, got {items!r}")
    return [scalar_from_json(x, field) for x in items]


def matrix_to_json(m: Matrix) -> dict:
    return {"field": m.field.to_json(), "entries": m.to_strings()}


def matrix_from_json(obj, field: FieldSpec = None) -> Matrix:
    """Accept ``{"field": ..., "entries": [[...]]}`` or a bare list of rows plus ``field``."""
    if isinstance(obj, dict):
        if "entries" not in obj:
            raise MalformedInput("matrix object needs 'entries'")
        if "field" in obj:
            field = field_from_json(obj["field"])
        rows = obj["entries"]
    else:
        rows = obj
    if field is None:
        raise MalformedInput("matrix has no field")
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise MalformedInput("entries must be a non-empty list of rows")
    if any(len(r) != len(rows) for r in rows):
        raise MalformedInput("matrix must be square")
    return Matrix([scalars_from_json(r, field) for r in rows], field)


def array_to_json(p: ParameterArray) -> dict:
    out = p.to_strings()
    out["field"] = p.field.to_json()
    return out


def array_from_json(obj, field: FieldSpec = None) -> ParameterArray:
    if not isinstance(obj, dict):
        raise MalformedInput("parameter array must be a JSON object")
    if "field" in obj:
        field = field_from_json(obj["field"])
    if field is None:
        raise MalformedInput("parameter array has no field")
    for key in ("d", "theta", "theta_star", "varphi", "phi"):
        if key not in obj:
            raise MalformedInput(f"parameter array is missing {key!r}")
    d = obj["d"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 0:
        raise MalformedInput(f"'d' must be a nonnegative integer, got {d!r}")
    seqs = {k: scalars_from_json(obj[k], field) for k in ("theta", "theta_star", "varphi", "phi")}
    want = {"theta": d + 1, "theta_star": d + 1, "varphi": d, "phi": d}
    for k, n in want.items():
        if len(seqs[k]) != n:
            raise MalformedInput(f"{k!r} must have length {n} for d={d}")
    return ParameterArray(seqs["theta"], seqs["theta_star"], seqs["varphi"], seqs["phi"], field)
