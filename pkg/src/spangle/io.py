"""JSON subspace documents: the on-disk interchange format.

Schema:

    {
      "field": "real" | "complex",
      "ambient_dim": <int>,
      "vectors": [[entry, ...], ...]
    }

Entries are numbers in the real case and two-element [re, im] arrays in
the complex case.  The vectors are spanning, not necessarily orthonormal
or independent.  Serialization is deterministic: sorted keys, two-space
indent, trailing newline, floats at 15 significant digits.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .linalg import DEFAULT_TOLERANCES, Field, ToleranceConfig
from .subspace import Subspace, from_spanning


class SubspaceDocumentError(ValueError):
    """A subspace document failed validation; ``field_name`` points at
    the offending entry."""

    def __init__(self, field_name: str, message: str):
        self.field_name = field_name
        super().__init__(f"{field_name}: {message}")


def _sigdigits(x: float) -> float:
    return float(f"{x:.15g}")


def encode_number(value, field: Field):
    if field is Field.COMPLEX:
        z = complex(value)
        return [_sigdigits(z.real), _sigdigits(z.imag)]
    return _sigdigits(float(np.real(value)))


def _decode_entry(entry: Any, field: Field, where: str):
    if field is Field.COMPLEX:
        if (
            not isinstance(entry, (list, tuple))
            or len(entry) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in entry)
        ):
            raise SubspaceDocumentError(where, "complex entries must be [re, im] number pairs")
        return complex(entry[0], entry[1])
    if not isinstance(entry, (int, float)) or isinstance(entry, bool):
        raise SubspaceDocumentError(where, "real entries must be numbers")
    return float(entry)


def parse_subspace_document(doc: Any) -> tuple[Field, int, list[np.ndarray]]:
    """Validate a parsed JSON object and return (field, ambient_dim, vectors)."""
    if not isinstance(doc, dict):
        raise SubspaceDocumentError("document", "expected a JSON object")
    if "field" not in doc:
        raise SubspaceDocumentError("field", "missing")
    if doc["field"] not in ("real", "complex"):
        raise SubspaceDocumentError("field", f"expected 'real' or 'complex', got {doc['field']!r}")
    field = Field.COMPLEX if doc["field"] == "complex" else Field.REAL
    if "ambient_dim" not in doc:
        raise SubspaceDocumentError("ambient_dim", "missing")
    n = doc["ambient_dim"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise SubspaceDocumentError("ambient_dim", "must be a nonnegative integer")
    if "vectors" not in doc:
        raise SubspaceDocumentError("vectors", "missing")
    raw = doc["vectors"]
    if not isinstance(raw, list):
        raise SubspaceDocumentError("vectors", "must be a list of vectors")
    vectors: list[np.ndarray] = []
    for i, rv in enumerate(raw):
        if not isinstance(rv, list):
            raise SubspaceDocumentError(f"vectors[{i}]", "must be a list of entries")
        if len(rv) != n:
            raise SubspaceDocumentError(
                f"vectors[{i}]", f"has {len(rv)} entries, ambient_dim is {n}"
            )
        entries = [
            _decode_entry(entry, field, f"vectors[{i}][{j}]") for j, entry in enumerate(rv)
        ]
        vectors.append(np.array(entries, dtype=field.dtype))
    return field, n, vectors


def load_subspace_file(path: str, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> tuple[Subspace, list[np.ndarray]]:
    """Read and validate a subspace document; returns the subspace and
    the raw spanning vectors (whose order carries the orientation)."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SubspaceDocumentError("document", f"invalid JSON: {exc}") from exc
    field, n, vectors = parse_subspace_document(doc)
    return from_spanning(vectors, field, cfg, ambient_dim=n), vectors


def subspace_document(V: Subspace) -> dict:
    vectors = [
        [encode_number(V.basis[i, j], V.field) for i in range(V.ambient_dim)]
        for j in range(V.dim)
    ]
    return {
        "field": V.field.value,
        "ambient_dim": V.ambient_dim,
        "vectors": vectors,
    }


def dump_json(obj: Any) -> str:
    """Deterministic JSON serialization used on every CLI exit path."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def write_subspace_file(path: str, V: Subspace) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_json(subspace_document(V)))
