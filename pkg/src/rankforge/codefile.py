"""JSON code files: a canonical, round-trippable serialization of every code type.

A code file is an object with keys ``field``, ``k``, ``m`` and
``representation``; the payload sits under ``basis`` (matrix-linear),
``words`` (matrix-set) or ``generator`` (vector).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .codes import AnyCode, GeneralCode, LinearMatrixCode, VectorCode
from .errors import InvalidParameter
from .field import FieldSpec
from .linalg import MatrixFq


def code_to_json(C: AnyCode) -> dict[str, Any]:
    head = {"field": C.spec.to_json(), "k": C.k}
    if isinstance(C, LinearMatrixCode):
        return {**head, "m": C.m, "representation": "matrix-linear",
                "basis": [M.to_json() for M in C.basis]}
    if isinstance(C, GeneralCode):
        return {**head, "m": C.m, "representation": "matrix-set",
                "words": [M.to_json() for M in C.words]}
    if isinstance(C, VectorCode):
        return {**head, "m": C.spec.m, "representation": "vector",
                "generator": [list(row) for row in C.generator]}
    raise InvalidParameter(f"cannot serialize {type(C).__name__}")


def _matrix(spec: FieldSpec, k: int, m: int, data: Any) -> MatrixFq:
    if isinstance(data, Mapping):
        M = MatrixFq.from_json(spec, data)
    else:
        # nested row lists are accepted as a convenience
        M = MatrixFq.from_rows(spec, data)
    if M.shape != (k, m):
        raise InvalidParameter(f"matrix of shape {M.shape} in a {k}x{m} code")
    return M


def code_from_json(data: Mapping[str, Any]) -> AnyCode:
    """Parse a code file object. Matrix-linear bases may be dependent; their span is taken."""
    try:
        spec = FieldSpec.from_json(data["field"])
        k, m = int(data["k"]), int(data["m"])
        rep = data["representation"]
    except (KeyError, TypeError) as exc:
        raise InvalidParameter(f"malformed code file: {exc}") from None
    if rep == "matrix-linear":
        mats = [_matrix(spec, k, m, x) for x in data.get("basis", [])]
        return LinearMatrixCode.span(spec, k, m, mats)
    if rep == "matrix-set":
        return GeneralCode(spec, k, m, tuple(_matrix(spec, k, m, x) for x in data.get("words", [])))
    if rep == "vector":
        if spec.m != m:
            raise InvalidParameter(f"field has m = {spec.m} but the file says m = {m}")
        return VectorCode.span(spec, k, [[int(x) for x in row] for row in data.get("generator", [])])
    raise InvalidParameter(f"unknown representation {rep!r}")


def dumps_code(C: AnyCode) -> str:
    return json.dumps(code_to_json(C), sort_keys=True)


def loads_code(text: str) -> AnyCode:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidParameter(f"code file is not valid JSON: {exc}") from None
    return code_from_json(data)


def load_code(path: str | Path) -> AnyCode:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InvalidParameter(f"cannot read {path}: {exc}") from None
    return loads_code(text)


def save_code(C: AnyCode, path: str | Path) -> None:
    Path(path).write_text(dumps_code(C) + "\n")
