"""JSON generator files

Format: ``{"p": 5, "n": 3, "generators": {"x": [[1, 1, 0], ...], ...}}`` with
integer entries in [0, p). Generator order in the file is kept.
"""

from pathlib import Path

from vwlab.errors import SchemaError
from vwlab.group.matrix_group import MatrixGroup
from vwlab.util.json_io import load_json

GENERATORS_SCHEMA = {
    "type": "object",
    "required": ["p", "n", "generators"],
    "additionalProperties": False,
    "properties": {
        "p": {"type": "integer", "minimum": 2},
        "n": {"type": "integer", "minimum": 1},
        "generators": {
            "type": "object",
            "additionalProperties": {
                "type": "array",
                "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
            },
        },
    },
}


def load_generators(source: str | Path | dict) -> MatrixGroup:
    """Read a matrix group from a generator file

    Raises
    ------
    SchemaError
        Bad JSON, wrong layout, an entry outside [0, p) or a matrix of the wrong shape
    FieldError
        p is not a prime
    NonInvertibleGeneratorError
        A generator is singular mod p
    """
    data = load_json(source, GENERATORS_SCHEMA)
    p, n = data['p'], data['n']
    for label, rows in data['generators'].items():
        if len(rows) != n or any(len(row) != n for row in rows):
            raise SchemaError(f"Generator {label} must be {n} x {n}", path=f'generators/{label}')
        if any(v >= p for row in rows for v in row):
            raise SchemaError(f"Generator {label} has entries outside [0, {p})", path=f'generators/{label}')
    return MatrixGroup(p, n, data['generators'])


def dump_generators(group: MatrixGroup) -> dict:
    """The JSON form read by ``load_generators``
    """
    return {"p": group.p, "n": group.n,
            "generators": {label: g.tolist() for label, g in zip(group.labels, group.matrices)}}
