"""JSON file formats for Lie algebras, actions, maps and vector lists

Algebra files look like::

    {"field": "Q", "dim": 3, "labels": ["x", "a", "b"],
     "brackets": [{"i": 0, "j": 1, "coeffs": [{"k": 2, "c": "1"}]}]}

Indices are 0-based, only i < j entries are allowed and omitted pairs are zero.
"""

from collections.abc import Mapping
from pathlib import Path

from vwlab.errors import DimensionError, FieldError, SchemaError
from vwlab.exactmath import ExactMatrix, FieldSpec, Vector
from vwlab.lie.algebra import LieAlgebra
from vwlab.lie.maps import LinearMap
from vwlab.lie.standard import gl
from vwlab.util.json_io import load_json

_SCALAR = {"type": ["string", "integer"]}

ALGEBRA_SCHEMA = {
    "type": "object",
    "required": ["field", "dim"],
    "additionalProperties": False,
    "properties": {
        "field": {"type": "string"},
        "dim": {"type": "integer", "minimum": 0},
        "labels": {"type": "array", "items": {"type": "string"}},
        "brackets": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["i", "j", "coeffs"],
                "additionalProperties": False,
                "properties": {
                    "i": {"type": "integer", "minimum": 0},
                    "j": {"type": "integer", "minimum": 0},
                    "coeffs": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["k", "c"],
                            "additionalProperties": False,
                            "properties": {"k": {"type": "integer", "minimum": 0}, "c": _SCALAR},
                        },
                    },
                },
            },
        },
    },
}

MATRIX_SCHEMA = {"type": "array", "items": {"type": "array", "items": _SCALAR}}

ACTION_SCHEMA = {"type": "object", "additionalProperties": MATRIX_SCHEMA}

VECTORS_SCHEMA = {
    "type": "array",
    "items": {"oneOf": [{"type": "array", "items": _SCALAR},
                        {"type": "object", "additionalProperties": _SCALAR}]},
}


def _parse_field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except FieldError as e:
        raise SchemaError(str(e), path='field') from e


def _scalar(field: FieldSpec, value, path: str):
    try:
        return field.parse_scalar(value)
    except (ValueError, ZeroDivisionError) as e:
        raise SchemaError(str(e), path=path) from e


def load_algebra(source: str | Path | dict) -> LieAlgebra:
    """Read a Lie algebra from a file, JSON text or parsed data

    The table is built but not validated; call ``validate_lie`` for that.

    Raises
    ------
    SchemaError
        The input breaks the format: bad JSON, wrong types, i >= j, indices out
        of range, repeated pairs, or a label list of the wrong length
    """
    data = load_json(source, ALGEBRA_SCHEMA)
    field = _parse_field(data['field'])
    dim = data['dim']
    labels = data.get('labels')
    if labels is not None and (len(labels) != dim or len(set(labels)) != dim):
        raise SchemaError(f"Expected {dim} distinct labels, got {labels}", path='labels')

    brackets = {}
    for ii, entry in enumerate(data.get('brackets', [])):
        i, j = entry['i'], entry['j']
        if i >= dim or j >= dim:
            raise SchemaError(f"Index pair ({i}, {j}) out of range for dimension {dim}", path=f'brackets/{ii}')
        if i >= j:
            raise SchemaError(f"Only i < j entries are allowed. Pair given: ({i}, {j})", path=f'brackets/{ii}')
        if (i, j) in brackets:
            raise SchemaError(f"Pair ({i}, {j}) given twice", path=f'brackets/{ii}')
        coeffs = {}
        for kk, term in enumerate(entry['coeffs']):
            k = term['k']
            if k >= dim:
                raise SchemaError(f"Coefficient index {k} out of range for dimension {dim}",
                                  path=f'brackets/{ii}/coeffs/{kk}/k')
            coeffs[k] = _scalar(field, term['c'], f'brackets/{ii}/coeffs/{kk}/c')
        brackets[(i, j)] = coeffs
    return LieAlgebra.from_brackets(field, dim, brackets, labels=labels)


def dump_algebra(algebra: LieAlgebra) -> dict:
    """The JSON form read by ``load_algebra``; only nonzero i < j brackets are written
    """
    brackets = []
    for i, j, vec in algebra.nonzero_brackets():
        brackets.append({"i": i, "j": j,
                         "coeffs": [{"k": k, "c": str(c)} for k, c in enumerate(vec) if c]})
    return {"field": str(algebra.field), "dim": algebra.dim, "labels": list(algebra.labels), "brackets": brackets}


def load_matrix(source: str | Path | list, field: FieldSpec) -> ExactMatrix:
    """A matrix from nested lists of scalar strings

    Raises
    ------
    SchemaError
        Not a rectangular list of scalars
    """
    data = load_json(source, MATRIX_SCHEMA)
    try:
        return ExactMatrix.from_json(field, data)
    except (ValueError, ZeroDivisionError) as e:
        raise SchemaError(str(e)) from e


def load_vectors(source: str | Path | list, algebra: LieAlgebra) -> list[Vector]:
    """Vectors given as coefficient lists or as ``{"label": "coefficient"}`` objects

    Raises
    ------
    SchemaError
        A vector has the wrong length or names an unknown label
    """
    data = load_json(source, VECTORS_SCHEMA)
    vectors = []
    for ii, item in enumerate(data):
        try:
            if isinstance(item, Mapping):
                vectors.append(algebra.vector({label: algebra.field.parse_scalar(c) for label, c in item.items()}))
            else:
                vectors.append(algebra.coerce_vector([algebra.field.parse_scalar(c) for c in item]))
        except (KeyError, DimensionError, ValueError) as e:
            raise SchemaError(str(e), path=str(ii)) from e
    return vectors


def load_action(source: str | Path | dict, b: LieAlgebra, x: LieAlgebra) -> LinearMap:
    """An action ψ: B → gl(dim X), given as one matrix per B basis vector

    Keys are B labels or 0-based indices as strings; basis vectors left out act as zero.

    Raises
    ------
    SchemaError
        Unknown key or a matrix of the wrong shape
    """
    data = load_json(source, ACTION_SCHEMA)
    target = gl(x.dim, b.field)
    images = [[0] * (x.dim * x.dim) for _ in range(b.dim)]
    for key, rows in data.items():
        if key in b.labels:
            index = b.labels.index(key)
        elif key.isdigit() and int(key) < b.dim:
            index = int(key)
        else:
            raise SchemaError(f"Unknown basis vector {key!r}", path=key)
        mat = load_matrix(rows, b.field)
        if mat.shape != (x.dim, x.dim):
            raise SchemaError(f"Matrix of shape {mat.shape}, expected {(x.dim, x.dim)}", path=key)
        images[index] = list(mat.entries())
    return LinearMap.from_images(b, target, images)
