"""JSON forms of matrices, sequences and result documents.

Every rational is written as a string, ``"p"`` or ``"p/q"``; decimals are
never produced. A matrix document is ``{"matrix": [[...], ...], "label": ...}``
(a bare list of rows is accepted on input).
"""

import hashlib
import json
import re

from .exact import Matrix, format_rational, parse_rational
from .sequences import MatrixSequence


class DocumentError(ValueError):
    """Malformed input document."""


def matrix_to_json(m):
    return m.to_strings()


def matrix_from_json(rows):
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise DocumentError("matrix must be a nonempty list of rows")
    for row in rows:
        for v in row:
            if isinstance(v, float):
                raise DocumentError(f"inexact number {v!r}; write rationals as strings like \"7/16\"")
    try:
        return Matrix(rows)
    except (TypeError, ValueError) as exc:
        raise DocumentError(str(exc)) from None


def parse_matrix_document(obj):
    """Return (matrix, label) from a decoded JSON document."""
    if isinstance(obj, list):
        return matrix_from_json(obj), None
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise DocumentError('expected an object with a "matrix" field or a list of rows')
    label = obj.get("label")
    if label is not None and not isinstance(label, str):
        raise DocumentError("label must be a string")
    return matrix_from_json(obj["matrix"]), label


def load_matrix_document(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return parse_matrix_document(obj)


def matrix_document(m, label=None):
    doc = {"matrix": matrix_to_json(m)}
    if label is not None:
        doc["label"] = label
    return doc


def sequence_to_json(u):
    return {
        "dim": u.dim,
        "impulse": [{"i": i, "V": matrix_to_json(v)} for i, v in u.impulse],
        "geometric": [{"lambda": format_rational(lam), "W": matrix_to_json(w)} for lam, w in u.geometric],
    }


def sequence_from_json(obj):
    try:
        dim = obj["dim"]
        impulse = [(t["i"], matrix_from_json(t["V"])) for t in obj["impulse"]]
        geometric = [(parse_rational(t["lambda"]), matrix_from_json(t["W"])) for t in obj["geometric"]]
        return MatrixSequence(dim, impulse, geometric)
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"bad sequence document: {exc}") from None


def digest(m):
    """SHA-256 of the canonical JSON of a matrix; stable across input spellings."""
    canon = json.dumps(matrix_to_json(m), separators=(",", ":"))
    return hashlib.sha256(canon.encode("utf-8")).hexdigest()


_FLAT_ARRAY = re.compile(r"\[\s+([^\[\]{}]*?)\s+\]")


def dumps(doc):
    """Indented JSON with arrays of scalars (matrix rows) kept on one line."""
    text = json.dumps(doc, indent=2, ensure_ascii=False)
    return _FLAT_ARRAY.sub(lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text) + "\n"
