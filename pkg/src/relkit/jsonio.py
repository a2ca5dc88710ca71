"""JSON formats for scalars, matrices, relations, pencils and reports."""

from __future__ import annotations

import json
from typing import Any, Mapping

from .errors import MalformedCharacteristic, ParseError, ShapeMismatch
from .field import format_scalar, parse_scalar
from .linalg import Subspace
from .pencil import Pencil
from .relation import LinearRelation
from .weyr import WeyrCharacteristic


def dumps(obj: Any) -> str:
    """Canonical, byte-stable JSON text."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def vector_to_json(v) -> list[str]:
    return [format_scalar(a) for a in v]


def vector_from_json(v, n: int | None = None) -> tuple:
    if not isinstance(v, list):
        raise ParseError("vector must be a JSON array")
    if n is not None and len(v) != n:
        raise ParseError(f"vector has length {len(v)}, expected {n}")
    return tuple(_scalar(a) for a in v)


def _scalar(a):
    if isinstance(a, bool):
        raise ParseError("booleans are not scalars")
    if isinstance(a, int):
        return parse_scalar(str(a))
    if isinstance(a, str):
        return parse_scalar(a)
    raise ParseError(f"scalar must be a string or integer, got {a!r}")


def matrix_to_json(M) -> list[list[str]]:
    return [vector_to_json(row) for row in M]


def matrix_from_json(M) -> list[tuple]:
    if not isinstance(M, list):
        raise ParseError("matrix must be a JSON array of rows")
    rows = [vector_from_json(r) for r in M]
    if len({len(r) for r in rows}) > 1:
        raise ParseError("matrix rows have different lengths")
    return rows


def subspace_to_json(S: Subspace) -> list[list[str]]:
    return [vector_to_json(v) for v in S.basis]


def relation_to_json(A: LinearRelation) -> dict:
    return {"n": A.n, "pairs": [[vector_to_json(x), vector_to_json(y)] for x, y in A.pairs()]}


def relation_from_json(d: Mapping) -> LinearRelation:
    if not isinstance(d, Mapping) or "n" not in d or "pairs" not in d:
        raise ParseError('relation JSON needs "n" and "pairs"')
    n = d["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ParseError('"n" must be a nonnegative integer')
    pairs = d["pairs"]
    if not isinstance(pairs, list):
        raise ParseError('"pairs" must be an array')
    out = []
    for p in pairs:
        if not isinstance(p, list) or len(p) != 2:
            raise ParseError("each pair must be a two-element array [x, y]")
        out.append((vector_from_json(p[0], n), vector_from_json(p[1], n)))
    return LinearRelation.from_pairs(n, out)


def pencil_to_json(P: Pencil) -> dict:
    return {"E": matrix_to_json(P.E), "F": matrix_to_json(P.F)}


def pencil_from_json(d: Mapping) -> Pencil:
    try:
        return Pencil.of(matrix_from_json(d["E"]), matrix_from_json(d["F"]))
    except KeyError as ex:
        raise ParseError(f"pencil JSON is missing {ex}") from None
    except ShapeMismatch as ex:
        raise ParseError(str(ex)) from None


def weyr_from_json(d: Mapping) -> WeyrCharacteristic:
    try:
        return WeyrCharacteristic.from_json(d)
    except ParseError as ex:
        raise MalformedCharacteristic(f"bad eigenvalue key: {ex}") from None


def load_json(path: str) -> Any:
    try:
        if path == "-":
            import sys

            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as ex:
        raise ParseError(f"{path}: invalid JSON ({ex})") from None
    except OSError as ex:
        raise ParseError(f"{path}: {ex.strerror}") from None
