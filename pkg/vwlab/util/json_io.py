"""Reading JSON inputs against a schema, with field and line diagnostics
"""

import json
from logging import getLogger
from pathlib import Path

from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from vwlab.errors import SchemaError

logger = getLogger(__name__)


def read_json_text(source: str | Path) -> tuple[str, str]:
    """Text of a JSON input and a name to report it by

    A Path, or a string not starting with '{' or '[', names a file to read;
    any other string is taken as the JSON text itself.

    Raises
    ------
    SchemaError
        The named file does not exist
    """
    if isinstance(source, str) and source.lstrip().startswith(("{", "[")):
        return source, '<text>'
    if isinstance(source, (str, Path)):
        path = Path(source)
        if not path.is_file():
            raise SchemaError(f"{source}: file not found")
        return path.read_text(encoding='utf-8'), str(source)
    raise TypeError(f"JSON source must be a path or a string. Type given: {type(source)}")


def load_json(source: str | Path | dict | list, schema: dict) -> dict | list:
    """Parse JSON and validate it against a schema

    Parameters
    ----------
    source : str | Path | dict | list
        A file path, JSON text, or already-parsed data
    schema : dict
        The JSON schema the data must follow

    Returns
    -------
    dict | list
        The parsed data

    Raises
    ------
    SchemaError
        A named file does not exist, the text is not JSON (with its line),
        or the data breaks the schema (with the JSON path of the offending field)
    """
    if isinstance(source, (dict, list)):
        data, name = source, '<data>'
    else:
        text, name = read_json_text(source)
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise SchemaError(f"{name}: invalid JSON: {e.msg}", line=e.lineno) from e

    error = best_match(Draft202012Validator(schema).iter_errors(data))
    if error is not None:
        path = '/'.join(str(p) for p in error.absolute_path)
        logger.debug("Schema violation in %s at %s", name, path)
        raise SchemaError(f"{name}: {error.message}", path=path)
    return data


def dump_json(data, pretty: bool = True) -> str:
    """Deterministic JSON text: key order as built, no trailing whitespace
    """
    if pretty:
        return json.dumps(data, indent=2, ensure_ascii=False)
    return json.dumps(data, separators=(',', ':'), ensure_ascii=False)
